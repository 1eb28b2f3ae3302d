#include "skewpbw/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "skewpbw/cli/poly_parse.hpp"
#include "skewpbw/cli/report_json.hpp"
#include "skewpbw/cli/spec_file.hpp"
#include "skewpbw/presets.hpp"

namespace skewpbw::cli {

namespace {

struct Options {
  std::string spec;
  std::string preset;
  std::vector<std::string> params;
  std::string json_path;
  std::uint64_t seed = 0;
  std::string support = "deg1";
  std::string variant = "skew-pi";
  std::uint64_t max_pairs = 1ull << 24;
  std::string ring_class = "all";
  bool serial = false;
  std::vector<std::string> exprs;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds:
    case Verdict::holds_at_bound: return kOk;
    case Verdict::fails:
    case Verdict::not_applicable: return kFails;
    case Verdict::undecided_at_cap: return kUndecided;
  }
  return kUsage;
}

int worst(int a, int b) {
  auto rank = [](int c) { return c == kOk ? 0 : c == kFails ? 1 : c == kUndecided ? 2 : 3; };
  return rank(a) >= rank(b) ? a : b;
}

json param_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

LoadedSpec load(const Options& o) {
  if (!o.spec.empty() && !o.preset.empty()) throw CLI::ValidationError("--spec and --preset are exclusive");
  if (!o.spec.empty()) return load_spec_file(o.spec);
  if (o.preset.empty()) throw CLI::RequiredError("--spec or --preset");
  json params = json::object();
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param expects key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = param_value(kv.substr(eq + 1));
  }
  return load_preset(o.preset, params);
}

SearchBound support_bound(const Extension& ext, const std::string& text) {
  if (text == "deg1") return degree_bound(ext, 1);
  if (text == "deg2") return degree_bound(ext, 2);
  SearchBound b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto p = parse_normal_form(ext.ring(), ext.variable_names(), item);
    if (p.size() != 1 || p.terms().begin()->second != ext.ring().one()) {
      throw BadCoefficient("support entry '" + item + "' is not a monomial");
    }
    const auto& m = p.terms().begin()->first;
    if (std::find(b.support.begin(), b.support.end(), m) == b.support.end()) b.support.push_back(m);
  }
  if (b.support.empty()) throw BadCoefficient("empty support list");
  std::sort(b.support.begin(), b.support.end(),
            [&](const Monomial& x, const Monomial& y) { return ext.order().less(x, y); });
  return b;
}

ScanOptions scan_options(const Options& o) {
  ScanOptions s;
  s.parallel = !o.serial;
  s.seed = o.seed;
  return s;
}

ArmendarizOptions arm_options(const Options& o) {
  ArmendarizOptions a;
  a.parallel = !o.serial;
  a.seed = o.seed;
  a.max_pairs = o.max_pairs;
  return a;
}

std::string elems_text(const FiniteRing& R, const std::vector<Elem>& es) {
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i) s += (i ? ", " : "") + R.format(es[i]);
  return s;
}

void print_report(std::ostream& out, const Extension& ext, const PropertyReport& r, const std::string& indent = "") {
  const auto& R = ext.ring();
  out << indent << r.property << ": " << verdict_name(r.verdict) << " (" << r.work_count << " checked)\n";
  if (r.witness) {
    std::visit(
        [&](const auto& w) {
          using T = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<T, ElementWitness>) {
            out << indent << "  witness [" << w.law << "]: " << elems_text(R, w.elems) << "\n";
          } else if constexpr (std::is_same_v<T, MapWitness>) {
            out << indent << "  witness [" << w.law << "]: " << elems_text(R, w.elems);
            if (w.sigma_alpha) {
              out << "; alpha = (";
              for (std::size_t i = 0; i < w.sigma_alpha->exps.size(); ++i) {
                out << (i ? "," : "") << w.sigma_alpha->exps[i];
              }
              out << ")";
            }
            if (w.delta_word) {
              out << "; delta word = ";
              for (std::size_t i = 0; i < w.delta_word->size(); ++i) {
                out << (i ? " o " : "") << "delta_" << ext.variable_names()[(*w.delta_word)[i]];
              }
            }
            out << "\n";
          } else {
            out << indent << "  witness: f = " << ext.format(w.f) << ", g = " << ext.format(w.g) << "\n";
            out << indent << "  fg = " << ext.format(ext.mul(w.f, w.g)) << "\n";
            out << indent << "  offending: coefficients of " << ext.format_monomial(w.left) << " and "
                << ext.format_monomial(w.right) << " give " << R.format(w.product);
            if (w.offending) out << " (term " << ext.format(*w.offending) << ")";
            out << "\n";
          }
        },
        *r.witness);
  }
  for (const auto& n : r.notes) out << indent << "  note: " << n << "\n";
}

void print_estimate(std::ostream& out, const Analysis& an, const SearchBound& b, const ArmendarizOptions& ao) {
  const long double pairs = pair_space(an, b);
  out << "work estimate: " << an.ring().size() << "^" << 2 * b.support.size() << " = " << std::setprecision(4)
      << static_cast<double>(pairs) << " (f, g) pairs";
  if (an.ring().size() > 16 || pairs > static_cast<long double>(ao.max_pairs)) {
    out << "; sampling " << ao.samples << " pairs with seed " << ao.seed;
  }
  out << "\n";
}

struct Outcome {
  int code = kOk;
  json results = json::array();
};

Outcome cmd_validate(const LoadedSpec& ls, std::ostream& out) {
  const auto& ext = *ls.ext;
  const auto rep = ext.validate();
  out << "valid: " << ext.nvars() << " variable(s) over a " << backend_name(ext.ring().backend())
      << " ring of size " << ext.ring().size() << "; " << rep.triples_checked << " triple overlap(s), "
      << rep.scalar_checks << " scalar overlap(s) checked\n";
  Outcome o;
  o.results.push_back({{"property", "presentation_consistent"},
                       {"verdict", "holds"},
                       {"triples_checked", rep.triples_checked},
                       {"scalar_checks", rep.scalar_checks},
                       {"scalar_sampled", rep.scalar_sampled}});
  return o;
}

Outcome cmd_mul(const LoadedSpec& ls, const std::vector<std::string>& exprs, const std::string& op,
                std::ostream& out) {
  const auto& ext = *ls.ext;
  if (exprs.empty()) throw CLI::ValidationError(op + " needs at least one expression");
  SkewPoly acc = parse_poly(ext, exprs[0]);
  for (std::size_t i = 1; i < exprs.size(); ++i) acc = ext.mul(acc, parse_poly(ext, exprs[i]));
  out << ext.format(acc) << "\n";
  Outcome o;
  o.results.push_back({{"operation", op}, {"inputs", exprs}, {"result", ext.format(acc)}});
  return o;
}

Outcome cmd_leading(const LoadedSpec& ls, const std::vector<std::string>& exprs, std::ostream& out) {
  const auto& ext = *ls.ext;
  if (exprs.size() != 1) throw CLI::ValidationError("leading takes one expression");
  const auto f = parse_poly(ext, exprs[0]);
  const auto ld = ext.leading(f);
  const std::string lm = ld.zero ? "0" : ext.format_monomial(ld.lm);
  const std::string lc = ext.ring().format(ld.lc);
  out << "lm = " << lm << ", lc = " << lc << ", deg = " << ld.deg << "\n";
  Outcome o;
  o.results.push_back({{"operation", "leading"},
                       {"input", exprs[0]},
                       {"normal_form", ext.format(f)},
                       {"lm", lm},
                       {"lc", lc},
                       {"deg", ld.deg}});
  return o;
}

Outcome cmd_nilpotent(const Analysis& an, const std::vector<std::string>& exprs, std::ostream& out) {
  const auto& ext = *an.ext;
  if (exprs.size() != 1) throw CLI::ValidationError("nilpotent takes one expression");
  const auto f = parse_poly(ext, exprs[0]);
  const auto v = an.theorem_hypotheses() ? is_nilpotent_poly_checked(an, f) : is_nilpotent_poly_oracle(an, f);
  out << ext.format(f) << ": " << (v.nilpotent ? "nilpotent" : "not nilpotent") << " (" << nil_method_name(v.method)
      << ", exponent " << v.exponent_used << (v.at_oracle_bound ? ", at oracle bound" : "") << ")\n";
  Outcome o;
  o.code = v.nilpotent ? kOk : kFails;
  o.results.push_back({{"operation", "nilpotent"},
                       {"input", ext.format(f)},
                       {"nilpotent", v.nilpotent},
                       {"method", nil_method_name(v.method)},
                       {"exponent_used", v.exponent_used},
                       {"at_oracle_bound", v.at_oracle_bound}});
  return o;
}

Outcome cmd_ring_class(const LoadedSpec& ls, const Options& opt, std::ostream& out) {
  const auto& R = ls.ext->ring();
  std::vector<RingClass> classes;
  if (opt.ring_class == "all") {
    classes = {RingClass::reduced, RingClass::reversible, RingClass::semicommutative, RingClass::ni};
  } else if (auto c = parse_ring_class(opt.ring_class)) {
    classes = {*c};
  } else {
    throw CLI::ValidationError("unknown ring class '" + opt.ring_class + "'");
  }
  Outcome o;
  for (auto c : classes) {
    const auto rep = ring_class_report(R, check_ring_class(R, c, scan_options(opt)));
    print_report(out, *ls.ext, rep);
    o.code = worst(o.code, exit_for(rep.verdict));
    o.results.push_back(report_to_json(*ls.ext, rep));
  }
  return o;
}

Outcome cmd_compat(const Analysis& an, std::ostream& out) {
  Outcome o;
  for (const auto* r : {&an.compat.sigma, &an.compat.delta}) {
    print_report(out, *an.ext, *r);
    o.results.push_back(report_to_json(*an.ext, *r));
  }
  const auto c = an.compat.combined();
  out << "(Sigma, Delta)-compatible: " << verdict_name(c.verdict) << "\n";
  o.code = exit_for(c.verdict);
  return o;
}

Outcome cmd_rigid(const Analysis& an, std::ostream& out) {
  Outcome o;
  print_report(out, *an.ext, an.rigid);
  o.results.push_back(report_to_json(*an.ext, an.rigid));
  o.code = exit_for(an.rigid.verdict);
  return o;
}

Outcome cmd_armendariz(const Analysis& an, const Options& opt, std::ostream& out) {
  const auto variant = parse_variant(opt.variant);
  if (!variant) throw CLI::ValidationError("unknown variant '" + opt.variant + "'");
  const auto bound = support_bound(*an.ext, opt.support);
  const auto ao = arm_options(opt);
  if (opt.support == "deg2") print_estimate(out, an, bound, ao);
  const auto rep = check_armendariz(an, *variant, bound, ao);
  print_report(out, *an.ext, rep);
  Outcome o;
  o.code = exit_for(rep.verdict);
  o.results.push_back(report_to_json(*an.ext, rep));
  return o;
}

Outcome cmd_lemmas(const Analysis& an, std::ostream& out) {
  Outcome o;
  try {
    for (const auto& r : verify_lemma_nil_stability(an)) {
      print_report(out, *an.ext, r);
      o.code = worst(o.code, exit_for(r.verdict));
      o.results.push_back(report_to_json(*an.ext, r));
    }
  } catch (const HypothesisNotVerified& e) {
    const auto c = an.compat.combined();
    out << "not applicable: " << e.what() << "\n";
    print_report(out, *an.ext, c, "  ");
    PropertyReport na;
    na.property = "lemma_nil_stability";
    na.verdict = Verdict::not_applicable;
    na.notes.push_back(e.what());
    o.results.push_back(report_to_json(*an.ext, na));
    o.results.push_back(report_to_json(*an.ext, c));
    o.code = c.verdict == Verdict::undecided_at_cap ? kUndecided : kFails;
  }
  return o;
}

Outcome cmd_suite(const Analysis& an, const Options& opt, std::ostream& out) {
  const auto bound = support_bound(*an.ext, opt.support);
  const auto ao = arm_options(opt);
  if (opt.support == "deg2") print_estimate(out, an, bound, ao);
  Outcome o;
  for (const auto& imp : verify_implication_suite(an, bound, ao)) {
    out << imp.name << ": " << implication_status_name(imp.status) << "\n";
    for (const auto& a : imp.antecedents) print_report(out, *an.ext, a, "  if   ");
    for (const auto& c : imp.consequents) print_report(out, *an.ext, c, "  then ");
    if (imp.status == ImplicationStatus::violation) o.code = worst(o.code, kFails);
    if (imp.status == ImplicationStatus::undecided) o.code = worst(o.code, kUndecided);
    o.results.push_back(implication_to_json(*an.ext, imp));
  }
  return o;
}

Outcome cmd_presets(std::ostream& out) {
  Outcome o;
  for (const auto& e : presets::catalog()) {
    std::string status = "valid";
    try {
      Extension::create(presets::build(e.name, e.params));
    } catch (const Error& err) {
      status = std::string(err.kind()) + ": " + err.what();
      o.code = kFails;
    }
    out << std::left << std::setw(24) << e.label << " " << std::setw(18) << e.name << " " << e.description << " ["
        << status << "]\n";
    o.results.push_back({{"label", e.label}, {"name", e.name}, {"description", e.description}, {"status", status}});
  }
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew PBW extensions over finite rings: arithmetic and property checks", "skewpbw"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) {
      sub->add_option("--spec", opt.spec, "Extension spec file (JSON)");
      sub->add_option("--preset", opt.preset, "Preset name instead of a spec file");
      sub->add_option("--param", opt.params, "Preset parameter key=value (repeatable)");
      sub->add_option("--seed", opt.seed, "Seed for sampled scopes");
      sub->add_flag("--serial", opt.serial, "Use the serial reference scans");
    }
    sub->add_option("--json", opt.json_path, "Write the JSON report here");
  };
  auto with_exprs = [&](CLI::App* sub) { sub->add_option("expr", opt.exprs, "Polynomial expression(s)")->required(); };

  auto* validate = app.add_subcommand("validate", "Validate an extension spec");
  common(validate, true);
  auto* mul = app.add_subcommand("mul", "Multiply polynomials left to right");
  common(mul, true);
  with_exprs(mul);
  auto* nf = app.add_subcommand("nf", "Normal form of a polynomial");
  common(nf, true);
  with_exprs(nf);
  auto* leading = app.add_subcommand("leading", "Leading monomial, coefficient and degree");
  common(leading, true);
  with_exprs(leading);
  auto* nilpotent = app.add_subcommand("nilpotent", "Decide nilpotency of a polynomial");
  common(nilpotent, true);
  with_exprs(nilpotent);
  auto* ring_class = app.add_subcommand("ring-class", "Reduced / reversible / semicommutative / NI");
  common(ring_class, true);
  ring_class->add_option("--class", opt.ring_class, "reduced, reversible, semicommutative, NI or all");
  auto* compat = app.add_subcommand("compat", "(Sigma, Delta)-compatibility");
  common(compat, true);
  auto* rigid = app.add_subcommand("rigid", "Sigma-rigidity");
  common(rigid, true);
  auto* armendariz = app.add_subcommand("armendariz", "Bounded Armendariz-type check");
  common(armendariz, true);
  armendariz->add_option("--variant", opt.variant, "skew-pi, sigma-skew, sigma-delta-skew or skew");
  armendariz->add_option("--support", opt.support, "deg1, deg2 or a comma-separated monomial list");
  armendariz->add_option("--max-pairs", opt.max_pairs, "Sample above this many (f, g) pairs");
  auto* lemmas = app.add_subcommand("lemmas", "Nil-stability lemmas");
  common(lemmas, true);
  auto* suite = app.add_subcommand("suite", "Implication suite");
  common(suite, true);
  suite->add_option("--support", opt.support, "deg1, deg2 or a comma-separated monomial list");
  suite->add_option("--max-pairs", opt.max_pairs, "Sample above this many (f, g) pairs");
  auto* presets_cmd = app.add_subcommand("presets", "List the preset catalog");
  common(presets_cmd, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Outcome result;
  std::string digest;
  try {
    if (command == "presets") {
      result = cmd_presets(out);
      digest = fnv1a64_hex("presets");
    } else {
      const auto ls = load(opt);
      digest = ls.digest;
      auto analysis = [&] { return Analysis::run(ls.ext, scan_options(opt)); };
      if (command == "validate") {
        result = cmd_validate(ls, out);
      } else if (command == "mul" || command == "nf") {
        result = cmd_mul(ls, opt.exprs, command, out);
      } else if (command == "leading") {
        result = cmd_leading(ls, opt.exprs, out);
      } else if (command == "nilpotent") {
        result = cmd_nilpotent(analysis(), opt.exprs, out);
      } else if (command == "ring-class") {
        result = cmd_ring_class(ls, opt, out);
      } else if (command == "compat") {
        result = cmd_compat(analysis(), out);
      } else if (command == "rigid") {
        result = cmd_rigid(analysis(), out);
      } else if (command == "armendariz") {
        result = cmd_armendariz(analysis(), opt, out);
      } else if (command == "lemmas") {
        result = cmd_lemmas(analysis(), out);
      } else if (command == "suite") {
        result = cmd_suite(analysis(), opt, out);
      }
    }
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecError& e) {
    err << "error[" << e.kind() << "] at " << (e.pointer().empty() ? "/" : e.pointer()) << ": " << e.what()
        << "\n";
    return kUsage;
  } catch (const RewriteBudgetExceeded& e) {
    err << "error[" << e.kind() << "]: " << e.what() << "\n";
    return kUndecided;
  } catch (const Error& e) {
    err << "error[" << e.kind() << "]: " << e.what() << "\n";
    return kUsage;
  }

  if (!opt.json_path.empty()) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ofstream f(opt.json_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << opt.json_path << "\n";
      return kUsage;
    }
    f << make_document(command, digest, opt.seed, result.results, ms).dump(2) << "\n";
  }
  return result.code;
}

}  // namespace skewpbw::cli
