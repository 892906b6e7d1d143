#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "adelic/act.hpp"
#include "adelic/cohomology.hpp"
#include "adelic/parse.hpp"
#include "adelic/suite.hpp"

using namespace adelic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string scheme = "P1/Q";
  std::uint64_t seed = 1;
  int trials = 10;
  int order_cap = kDefaultOrderCap;
  std::vector<std::string> suites;
  std::string format = "human";
  std::string config;

  std::string beta, a = "1", phi, adele, sheaf, f, at, curve;
  int delta_steps = 0;
  int order = 8;
};

bool records(const Options& o) { return o.format == "records"; }

void emit(const Options& o, const json& record, const std::string& human) {
  if (records(o)) std::cout << record.dump() << "\n";
  else std::cout << human << "\n";
}

ResidueComplexElement parse_phi(const Scheme& X, const Options& o) {
  Form w = parse_form(o.phi, X.patch_vars(0), X.base());
  ResidueComplexElement phi(ResidueElement::generic(X, w));
  for (int i = 0; i < o.delta_steps; ++i) phi = coboundary_delta(phi, o.order_cap);
  return phi;
}

json components(const ResidueComplexElement& e) {
  json out = json::object();
  for (const auto& [p, v] : e.terms()) out[p.str()] = v.str();
  return out;
}

int cmd_verify(Options o, const CLI::App& sub) {
  SuiteConfig c;
  if (!o.config.empty()) c = SuiteConfig::load(o.config);
  if (sub.count("--scheme") || o.config.empty()) c.scheme = o.scheme;
  if (sub.count("--seed") || o.config.empty()) c.seed = o.seed;
  if (sub.count("--trials") || o.config.empty()) c.trials = o.trials;
  if (sub.count("--order-cap") || o.config.empty()) c.order_cap = o.order_cap;
  if (!o.suites.empty()) c.suites = o.suites;
  c.validate();
  Report rep = run_suite(c);
  if (!records(o)) std::printf("%-26s %-8s %9s %9s %9s\n", "identity", "scheme", "instances", "failures", "seconds");
  for (const auto& id : rep.identities) {
    if (records(o)) {
      std::cout << json{{"type", "identity"}, {"name", id.name},         {"scheme", id.scheme},
                        {"seed", id.seed},    {"instances", id.instances}, {"failures", id.failures.size()},
                        {"seconds", id.seconds}}
                       .dump()
                << "\n";
    } else {
      std::printf("%-26s %-8s %9d %9zu %9.3f\n", id.name.c_str(), id.scheme.c_str(), id.instances, id.failures.size(),
                  id.seconds);
    }
    for (const auto& f : id.failures) {
      emit(o,
           json{{"type", "failure"}, {"identity", id.name}, {"instance", f.instance}, {"seed", f.seed},
                {"input", f.input},  {"detail", f.detail}},
           "  instance " + std::to_string(f.instance) + " (seed " + std::to_string(f.seed) + "): " + f.input + "\n    " +
               f.detail);
    }
  }
  emit(o, json{{"type", "summary"}, {"ok", rep.ok()}}, rep.ok() ? "all identities hold" : "FAILURES");
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_residue(const Options& o) {
  const BaseField k = Scheme::parse(o.scheme).base();
  Scalar r;
  if (o.beta.find("s1") != std::string::npos || o.beta.find("s2") != std::string::npos) {
    const Vars s{"s1", "s2"};
    r = laurent_residue(parse_form(o.beta, s, k), parse_ratfunc(o.a, s, k), o.order_cap);
  } else {
    Scheme X = Scheme::parse("A1/" + o.scheme.substr(o.scheme.find('/') + 1));
    Form beta = parse_form(o.beta, X.patch_vars(0), k);
    ResidueElement phi = ResidueElement::generic(X, beta);
    RatFunc a = parse_ratfunc(o.a, X.patch_vars(0), k);
    Point origin = Point::parse(X, "pt(t=0)");
    r = delta_step(times_function(phi, a), origin, o.order_cap).apply(RatFunc::constant(Scalar::one(k), X.patch_vars(0), k));
  }
  emit(o, json{{"type", "residue"}, {"beta", o.beta}, {"a", o.a}, {"value", r.str()}}, r.str());
  return kExitOk;
}

int cmd_delta(const Options& o) {
  Scheme X = Scheme::parse(o.scheme);
  ResidueComplexElement phi = parse_phi(X, o);
  ResidueComplexElement d = coboundary_delta(phi, o.order_cap);
  json rec{{"type", "delta"}, {"scheme", X.str()}, {"phi", phi.str()}, {"value", components(d)}};
  std::string human = "delta = " + d.str();
  json on_one = json::object();
  for (const auto& [p, v] : d.terms())
    if (p.is_closed()) {
      Scalar s = v.apply(RatFunc::constant(Scalar::one(X.base()), X.patch_vars(p.patch()), X.base()));
      on_one[p.str()] = s.str();
      human += "\n  at " + p.str() + " on 1: " + s.str();
    }
  rec["on_one"] = on_one;
  emit(o, rec, human);
  return kExitOk;
}

int cmd_act(const Options& o) {
  Scheme X = Scheme::parse(o.scheme);
  ResidueComplexElement phi = parse_phi(X, o);
  Adele a = parse_adele(X, o.adele);
  ResidueComplexElement r = act(phi, a, o.order_cap);
  emit(o, json{{"type", "act"}, {"scheme", X.str()}, {"phi", phi.str()}, {"adele", a.str()}, {"value", components(r)}},
       r.str());
  return kExitOk;
}

int cmd_pair(const Options& o) {
  Scheme X = Scheme::parse(o.scheme);
  ResidueComplexElement phi = parse_phi(X, o);
  Adele a = parse_adele(X, o.adele);
  Scalar r = residue_pairing(phi, a, o.order_cap);
  emit(o, json{{"type", "pair"}, {"scheme", X.str()}, {"phi", phi.str()}, {"adele", a.str()}, {"value", r.str()}},
       r.str());
  return kExitOk;
}

int cmd_cohomology(const Options& o) {
  Scheme X = Scheme::parse(o.scheme);
  const std::string& s = o.sheaf;
  if (s.size() < 4 || s.rfind("O(", 0) != 0 || s.back() != ')') throw ParseError("expected O(n)", 0);
  int n = 0;
  try {
    n = std::stoi(s.substr(2, s.size() - 3));
  } catch (const std::logic_error&) {
    throw ParseError("expected an integer twist", 2);
  }
  CohomologyDims d = line_bundle_cohomology(X, n);
  emit(o, json{{"type", "cohomology"}, {"scheme", X.str()}, {"sheaf", s}, {"h0", d.h0}, {"h1", d.h1}},
       "h0=" + std::to_string(d.h0) + ", h1=" + std::to_string(d.h1));
  return kExitOk;
}

int cmd_expand(const Options& o) {
  Scheme X = Scheme::parse(o.scheme);
  RatFunc f = parse_ratfunc(o.f, X.patch_vars(0), X.base());
  Point x = Point::parse(X, o.at);
  std::string value;
  if (X.dim() == 1) value = expand_at_place(X, f, x, o.order).str();
  else {
    if (o.curve.empty()) fail(ErrorCode::Parse, "expand on a plane needs --curve");
    Point C = Point::parse(X, o.curve);
    if (C.patch() != 0 || x.patch() != 0) fail(ErrorCode::Unsupported, "expand on a plane works in patch 0");
    value = iter_expand(make_frame(C, x, o.order, o.order), f).str();
  }
  emit(o, json{{"type", "expand"}, {"scheme", X.str()}, {"f", o.f}, {"at", x.str()}, {"value", value}}, value);
  return kExitOk;
}

bool usage_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidPoint:
    case ErrorCode::InvalidChain:
    case ErrorCode::PlaceNotOnScheme:
    case ErrorCode::VariableMismatch:
    case ErrorCode::Unsupported:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adeles, residue complexes and their DG-module structure on lines and planes"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--scheme", o.scheme, "Scheme literal, e.g. P1/Q, A2/F5")->capture_default_str();
    s->add_option("--order-cap", o.order_cap, "Cap for automatic precision doubling")->capture_default_str();
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "records"}))->capture_default_str();
  };
  auto phi_opts = [&](CLI::App* s) {
    s->add_option("--phi", o.phi, "Top form in patch 0; the generic residue element")->required();
    s->add_option("--delta", o.delta_steps, "Apply the coboundary this many times first")->check(CLI::Range(0, 2));
  };

  CLI::App* verify = app.add_subcommand("verify", "Run identity suites");
  common(verify);
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--trials", o.trials, "Instances per identity")->capture_default_str();
  verify->add_option("--suite", o.suites, "Identity names (repeatable); default: all applicable");
  verify->add_option("--config", o.config, "Key-value config file")->check(CLI::ExistingFile);

  CLI::App* residue = app.add_subcommand("residue", "Residue of a*beta at the origin");
  common(residue);
  residue->add_option("--beta", o.beta, "Top form in s1,s2 (plane) or t (line)")->required();
  residue->add_option("--a", o.a, "Function multiplying beta")->capture_default_str();

  CLI::App* delta = app.add_subcommand("delta", "Coboundary of a generic residue element");
  common(delta);
  phi_opts(delta);

  CLI::App* actc = app.add_subcommand("act", "Right action of an adele on a residue element");
  common(actc);
  phi_opts(actc);
  actc->add_option("--adele", o.adele, "Adele literal")->required();

  CLI::App* pair = app.add_subcommand("pair", "Residue pairing of a residue element with an adele");
  common(pair);
  phi_opts(pair);
  pair->add_option("--adele", o.adele, "Adele literal")->required();

  CLI::App* coh = app.add_subcommand("cohomology-dims", "h0 and h1 of O(n) on the projective line");
  common(coh);
  coh->add_option("--sheaf", o.sheaf, "Sheaf, O(n)")->required();

  CLI::App* expand = app.add_subcommand("expand", "Local expansion of a function");
  common(expand);
  expand->add_option("--f", o.f, "Rational function in patch 0")->required();
  expand->add_option("--at", o.at, "Closed point")->required();
  expand->add_option("--curve", o.curve, "Curve through the point (planes)");
  expand->add_option("--order", o.order, "Expansion order")->check(CLI::Range(1, 256))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, *verify);
    if (*residue) return cmd_residue(o);
    if (*delta) return cmd_delta(o);
    if (*actc) return cmd_act(o);
    if (*pair) return cmd_pair(o);
    if (*coh) return cmd_cohomology(o);
    if (*expand) return cmd_expand(o);
  } catch (const Error& e) {
    if (records(o)) std::cout << json{{"type", "error"}, {"code", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return usage_error(e.code()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}
