#include "adelic/adele.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "adelic/parse.hpp"

namespace adelic {

struct AdeleNode {
  enum class Kind { Explicit, Global, Coface, Sum, Scale, Product, Pullback };
  Kind kind = Kind::Explicit;
  Scheme X;
  int q = 0;
  std::map<Chain, RatFunc> table;
  RatFunc r;
  int index = 0;
  Scalar c;
  std::shared_ptr<const AdeleNode> a, b;
  std::optional<P1Map> f;
};

namespace {

using Node = AdeleNode;
using Kind = AdeleNode::Kind;

RatFunc zero_function(const Scheme& X) { return RatFunc(Poly(X.patch_vars(0), X.base())); }

}  // namespace

bool regular_at(const RatFunc& r, const Point& p) {
  const Scheme& X = p.scheme();
  switch (p.kind()) {
    case PointKind::Generic: return true;
    case PointKind::Curve: return X.function_to_patch(r, 0, p.patch()).is_regular_along(p.curve_poly());
    case PointKind::Closed: {
      RatFunc g = X.function_to_patch(r, 0, p.patch());
      if (X.dim() == 2) return g.is_defined_at(p.coords());
      Poly m = Poly::from_upoly(p.minpoly(), 0, X.patch_vars(p.patch()), X.base());
      return g.valuation(m) >= 0;
    }
  }
  return false;
}

Adele Adele::explicit_values(const Scheme& X, int q, const std::map<Chain, RatFunc>& values) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Explicit;
  n->X = X;
  n->q = q;
  for (const auto& [chain, v] : values) {
    if (chain.length() != q) fail(ErrorCode::DegreeMismatch, "chain " + chain.str() + " has the wrong length");
    if (!is_reduced(chain)) fail(ErrorCode::InvalidChain, "adele values live on reduced chains");
    if (chain.front().scheme() != X) fail(ErrorCode::InvalidChain, "chain on another scheme");
    if (v.vars() != X.patch_vars(0) && !v.is_constant()) fail(ErrorCode::VariableMismatch, "values use patch-0 coordinates");
    if (!regular_at(v, chain.front()))
      fail(ErrorCode::NotInCompletion, v.str() + " is not in the local ring at " + chain.front().str());
    if (!v.is_zero()) n->table.emplace(chain, v);
  }
  return Adele(n);
}

Adele Adele::global(const Scheme& X, const RatFunc& r) {
  bool ok = X.is_projective() ? r.is_constant() : r.is_polynomial();
  if (!ok) fail(ErrorCode::NotInCompletion, r.str() + " is not a global section of O on " + X.str());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Global;
  n->X = X;
  n->q = 0;
  n->r = r;
  return Adele(n);
}

Adele Adele::one(const Scheme& X) { return global(X, RatFunc::constant(Scalar::one(X.base()), X.patch_vars(0), X.base())); }

Adele Adele::zero(const Scheme& X, int q) { return explicit_values(X, q, {}); }

Adele Adele::coface(int i, const Adele& b) {
  if (i < 0 || i > b.degree() + 1) fail(ErrorCode::InvalidChain, "coface index out of range");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Coface;
  n->X = b.scheme();
  n->q = b.degree() + 1;
  n->index = i;
  n->a = b.node_;
  return Adele(n);
}

Adele Adele::pullback(const P1Map& f, const Adele& b) {
  if (f.scheme() != b.scheme()) fail(ErrorCode::InvalidPoint, "map and adele on different schemes");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pullback;
  n->X = b.scheme();
  n->q = b.degree();
  n->a = b.node_;
  n->f = f;
  return Adele(n);
}

const Scheme& Adele::scheme() const {
  if (!node_) fail(ErrorCode::Undefined, "null adele");
  return node_->X;
}

int Adele::degree() const {
  if (!node_) fail(ErrorCode::Undefined, "null adele");
  return node_->q;
}

namespace {

RatFunc eval_node(const Node& n, const Chain& chain) {
  if (chain.length() != n.q) fail(ErrorCode::DegreeMismatch, "evaluating a degree-" + std::to_string(n.q) + " adele at " + chain.str());
  if (!is_reduced(chain)) return zero_function(n.X);
  switch (n.kind) {
    case Kind::Explicit: {
      auto it = n.table.find(chain);
      return it == n.table.end() ? zero_function(n.X) : it->second;
    }
    case Kind::Global: return n.r;
    case Kind::Coface: return eval_node(*n.a, face(chain, n.index));
    case Kind::Sum: return eval_node(*n.a, chain) + eval_node(*n.b, chain);
    case Kind::Scale: return n.c * eval_node(*n.a, chain);
    case Kind::Product: {
      const int qa = n.a->q;
      RatFunc x = eval_node(*n.a, segment(chain, 0, qa));
      if (x.is_zero()) return x;
      return x * eval_node(*n.b, segment(chain, qa, n.q));
    }
    case Kind::Pullback: return n.f->pullback(eval_node(*n.a, n.f->image(chain)));
  }
  return zero_function(n.X);
}

void collect_node(const Node& n, std::vector<RatFunc>& fs, std::vector<Point>& pts) {
  switch (n.kind) {
    case Kind::Explicit:
      for (const auto& [chain, v] : n.table) {
        fs.push_back(v);
        pts.insert(pts.end(), chain.points().begin(), chain.points().end());
      }
      return;
    case Kind::Global: fs.push_back(n.r); return;
    case Kind::Coface:
    case Kind::Scale: collect_node(*n.a, fs, pts); return;
    case Kind::Sum:
    case Kind::Product:
      collect_node(*n.a, fs, pts);
      collect_node(*n.b, fs, pts);
      return;
    case Kind::Pullback: {
      std::vector<RatFunc> f2;
      std::vector<Point> p2;
      collect_node(*n.a, f2, p2);
      for (const auto& g : f2) fs.push_back(n.f->pullback(g));
      for (const auto& p : p2) {
        auto pre = n.f->preimages(p);
        pts.insert(pts.end(), pre.begin(), pre.end());
      }
      return;
    }
  }
}

std::string str_node(const Node& n) {
  switch (n.kind) {
    case Kind::Explicit: {
      std::string s = "{";
      for (const auto& [chain, v] : n.table) s += (s.size() > 1 ? "; " : " ") + chain.str() + ": " + v.str();
      return s + (s.size() > 1 ? " }" : "}");
    }
    case Kind::Global: return n.r.str();
    case Kind::Coface: return "d" + std::to_string(n.index) + "(" + str_node(*n.a) + ")";
    case Kind::Sum: return "(" + str_node(*n.a) + " + " + str_node(*n.b) + ")";
    case Kind::Scale: return n.c.str() + "*" + str_node(*n.a);
    case Kind::Product: return "(" + str_node(*n.a) + " . " + str_node(*n.b) + ")";
    case Kind::Pullback: return "(" + n.f->str() + ")^*" + str_node(*n.a);
  }
  return "";
}

}  // namespace

RatFunc Adele::evaluate(const Chain& chain) const {
  if (!node_) fail(ErrorCode::Undefined, "null adele");
  return eval_node(*node_, chain);
}

Adele Adele::coboundary() const {
  Adele out = coface(0, *this);
  for (int i = 1; i <= degree() + 1; ++i) {
    Adele t = coface(i, *this);
    out = (i % 2 == 0) ? out + t : out - t;
  }
  return out;
}

Adele operator+(const Adele& a, const Adele& b) {
  if (a.degree() != b.degree()) fail(ErrorCode::DegreeMismatch, "adding adeles of different degrees");
  if (a.scheme() != b.scheme()) fail(ErrorCode::InvalidPoint, "adeles on different schemes");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->X = a.scheme();
  n->q = a.degree();
  n->a = a.node_;
  n->b = b.node_;
  return Adele(n);
}

Adele operator*(const Scalar& c, const Adele& a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scale;
  n->X = a.scheme();
  n->q = a.degree();
  n->c = c;
  n->a = a.node_;
  return Adele(n);
}

Adele Adele::operator-() const { return Scalar(-1L, scheme().base()) * *this; }

Adele operator-(const Adele& a, const Adele& b) { return a + (-b); }

Adele operator*(const Adele& a, const Adele& b) {
  if (a.scheme() != b.scheme()) fail(ErrorCode::InvalidPoint, "adeles on different schemes");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->X = a.scheme();
  n->q = a.degree() + b.degree();
  n->a = a.node_;
  n->b = b.node_;
  return Adele(n);
}

void Adele::collect_support(std::vector<RatFunc>& functions, std::vector<Point>& points) const {
  if (node_) collect_node(*node_, functions, points);
}

std::string Adele::str() const { return node_ ? str_node(*node_) : "null"; }

// ---------------------------------------------------------------- literals

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Adele parse_symbolic(const Scheme& X, const std::string& s) {
  std::string t = trim(s);
  if (t.size() > 3 && t[0] == 'd' && std::isdigit(static_cast<unsigned char>(t[1]))) {
    auto open = t.find('(');
    if (open != std::string::npos && t.back() == ')') {
      int i = std::stoi(t.substr(1, open - 1));
      return Adele::coface(i, parse_symbolic(X, t.substr(open + 1, t.size() - open - 2)));
    }
  }
  return Adele::global(X, parse_ratfunc(t, X.patch_vars(0), X.base()));
}

}  // namespace

Adele parse_adele(const Scheme& X, const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("adele", 0) == 0) s = trim(s.substr(5));
  if (s.empty() || s.front() != '{' || s.back() != '}') fail(ErrorCode::Parse, "adele literals are adele{ ... }");
  s = s.substr(1, s.size() - 2);
  std::map<Chain, RatFunc> table;
  int q = -1;
  std::optional<Adele> acc;
  auto add = [&](const Adele& a) { acc = acc ? *acc + a : a; };
  for (const auto& entry : split_top(s, ';')) {
    if (entry.empty()) continue;
    if (entry.rfind("symb:", 0) == 0) {
      add(parse_symbolic(X, entry.substr(5)));
      continue;
    }
    if (entry.rfind("global:", 0) == 0) {
      add(Adele::global(X, parse_ratfunc(trim(entry.substr(7)), X.patch_vars(0), X.base())));
      continue;
    }
    if (entry.front() != '(') fail(ErrorCode::Parse, "bad adele entry: " + entry);
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < entry.size(); ++i) {
      if (entry[i] == '(') ++depth;
      if (entry[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) fail(ErrorCode::Parse, "unbalanced chain in: " + entry);
    std::string rest = trim(entry.substr(close + 1));
    if (rest.empty() || rest[0] != ':') fail(ErrorCode::Parse, "expected ':' after chain in: " + entry);
    std::vector<Point> pts;
    for (const auto& p : split_top(entry.substr(1, close - 1), ',')) pts.push_back(Point::parse(X, p));
    Chain chain(pts);
    if (q >= 0 && chain.length() != q) fail(ErrorCode::DegreeMismatch, "explicit chains of different lengths");
    q = chain.length();
    RatFunc v = parse_ratfunc(trim(rest.substr(1)), X.patch_vars(0), X.base());
    auto it = table.find(chain);
    if (it == table.end()) table.emplace(chain, v);
    else it->second += v;
  }
  if (q >= 0) add(Adele::explicit_values(X, q, table));
  if (!acc) fail(ErrorCode::Parse, "empty adele literal");
  return *acc;
}

std::vector<Chain> saturated_chains_from(const Point& x, int length, const std::vector<Point>& candidates) {
  std::vector<std::vector<Point>> partial{{x}};
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<Point>> next;
    for (const auto& pts : partial) {
      const Point& last = pts.back();
      for (const auto& y : candidates) {
        if (y.dim() != last.dim() - 1 || !specializes(last, y)) continue;
        auto ext = pts;
        ext.push_back(y);
        next.push_back(std::move(ext));
      }
    }
    partial = std::move(next);
  }
  std::vector<Chain> out;
  for (auto& pts : partial) out.emplace_back(std::move(pts));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace adelic
