// regcert command-line front end.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "regcert/betti.hpp"
#include "regcert/graded.hpp"
#include "regcert/harness.hpp"
#include "regcert/io.hpp"
#include "regcert/lex.hpp"

using namespace regcert;

namespace {

constexpr int kUsage = 64;

// Bad input that is the caller's fault; reported with exit code 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ideal_path;
  std::string param_path;
  std::string order;
  std::optional<std::uint32_t> characteristic;
  std::optional<std::uint32_t> cutoff;
  std::uint64_t seed = 0;
  unsigned trials = 5;
  bool json_output = false;
  std::string out_path;
  std::string n_range = "2";
  std::string m_range = "2";
  std::string d_range = "2";
  std::string dvec;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GRange parse_range(const std::string& text, const char* flag) {
  const auto bad = [&] { return UsageError(std::string("--") + flag + " expects N or A..B, got '" + text + "'"); };
  const auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) throw bad();
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  GRange r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw bad();
  return r;
}

FieldSpec field_of(const Options& o) {
  if (!o.characteristic) return FieldSpec();
  if (*o.characteristic != 0 && !is_prime(*o.characteristic)) {
    throw UsageError("--char must be 0 or a prime, got " + std::to_string(*o.characteristic));
  }
  return FieldSpec(*o.characteristic);
}

TermOrder order_of(const std::string& name, std::size_t nvars, std::size_t kept) {
  if (name == "lex") return TermOrder::lex();
  if (name == "degrevlex") return TermOrder::degrevlex();
  if (name == "elim") return TermOrder::block(nvars - kept);
  throw UsageError("--order must be lex, degrevlex or elim, got '" + name + "'");
}

IdealFile load_ideal(const Options& o) {
  if (o.ideal_path.empty()) throw UsageError("--ideal FILE is required");
  IdealFile file = parse_ideal_file(read_file(o.ideal_path));
  if (o.characteristic) file.ring = PolyRing(file.ring.names(), field_of(o), file.ring.kept());
  if (!o.order.empty()) file.order = order_of(o.order, file.ring.nvars(), file.ring.kept());
  return file;
}

ParamFile load_param(const Options& o) {
  ParamFile file = parse_param_file(read_file(o.param_path));
  if (o.characteristic) file.field = field_of(o);
  return file;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + o.out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

int emit_report(const Options& o, const VerificationReport& r) {
  emit(o, o.json_output ? r.to_json(true).dump(2) : r.to_text());
  return exit_code(r.status());
}

template <class K>
void require_homogeneous(const IdealPresentation<K>& I) {
  if (!I.is_homogeneous()) {
    throw UsageError("homogeneity error: the ideal must be generated by homogeneous polynomials");
  }
}

// ---------------------------------------------------------------------------

template <class K>
int cmd_kernel(const Options& o) {
  Parametrisation<K> p;
  if (!o.param_path.empty()) {
    p = to_parametrisation<K>(load_param(o));
  } else {
    const GRange n = parse_range(o.n_range, "n"), m = parse_range(o.m_range, "m"), d = parse_range(o.d_range, "d");
    if (n.lo != n.hi || m.lo != m.hi || d.lo != d.hi) throw UsageError("kernel takes single values for --n --m --d");
    if (n.lo == 0 || m.lo == 0 || d.lo == 0) throw UsageError("--n, --m and --d must be positive");
    p = random_parametrisation<K>(n.lo, m.lo, d.lo, o.seed, field_of(o));
  }
  KernelOptions ko;
  if (o.order == "elim") {
    ko.use_block_order = true;
  } else if (!o.order.empty() && o.order != "lex") {
    throw UsageError("kernel supports --order lex or elim");
  }
  const auto P = kernel_of_map<K>(p.f, ko);
  const IdealFile out = to_ideal_file(P.presentation(), TermOrder::lex());
  if (o.json_output) {
    json j = {{"n", p.n}, {"m", p.m}, {"d", p.d}, {"field", p.field.name()}, {"generators", json::array()}};
    for (const auto& g : P.elements) j["generators"].push_back(g.to_string(P.ring.names()));
    emit(o, j.dump(2));
  } else {
    emit(o, print(out));
  }
  return 0;
}

template <class K>
int cmd_reg(const Options& o) {
  const IdealFile file = load_ideal(o);
  const auto I = to_presentation<K>(file);
  require_homogeneous(I);
  if (I.is_zero()) {
    emit(o, o.json_output ? json({{"reg", "-inf"}}).dump(2) : "reg = -inf (zero ideal)");
    return 0;
  }
  const BettiTable table = betti_table(I, TermOrder::degrevlex(), o.cutoff);
  if (!table.certified) {
    emit(o, o.json_output ? json({{"status", "inconclusive"}, {"certified_through", table.certified_through}}).dump(2)
                          : "inconclusive: Betti table certified only through degree " +
                                std::to_string(table.certified_through));
    return 2;
  }
  const auto reg = table.reg();
  if (o.json_output) {
    json j = {{"field", file.ring.field().name()}, {"betti", table.to_json()}, {"reg", reg ? json(*reg) : json("-inf")}};
    if (reg && !(table.entries.size() == 1 && table.entry(0, 0) == 1)) {
      const TInvariants t = t_invariants(table);
      j["t"] = t.t;
      j["p"] = t.p;
    }
    emit(o, j.dump(2));
  } else {
    std::string text = table.to_string();
    if (!text.empty() && text.back() != '\n') text += '\n';
    text += "reg = " + (reg ? std::to_string(*reg) : std::string("-inf")) + "\n";
    emit(o, text);
  }
  return 0;
}

template <class K>
int cmd_lex(const Options& o) {
  const IdealFile file = load_ideal(o);
  const auto I = to_presentation<K>(file);
  require_homogeneous(I);
  const LexResult lex = lex_of_ideal(I, TermOrder::degrevlex(), o.cutoff.value_or(4096));
  const auto& names = file.ring.names();
  std::optional<std::uint32_t> reg;
  if (lex.complete && !lex.ideal.is_zero() && !lex.ideal.is_unit()) reg = stable_regularity(lex.ideal);
  if (o.json_output) {
    json j = {{"complete", lex.complete},
              {"computed_through", lex.computed_through},
              {"generators", json::array()},
              {"reg", reg ? json(*reg) : json(nullptr)}};
    for (const auto& g : lex.ideal.generators()) j["generators"].push_back(g.to_string(names));
    emit(o, j.dump(2));
  } else {
    std::string text = "Lex = " + lex.ideal.to_string(names) + "\n";
    if (reg) text += "reg = " + std::to_string(*reg) + "\n";
    if (!lex.complete) text += "inconclusive: segment not stable through degree " + std::to_string(lex.computed_through) + "\n";
    emit(o, text);
  }
  return lex.complete ? 0 : 2;
}

int cmd_gtable(const Options& o, bool seed_given) {
  const GRange n = parse_range(o.n_range, "n"), m = parse_range(o.m_range, "m"), d = parse_range(o.d_range, "d");
  if (n.lo == 0 || d.lo == 0) throw UsageError("--n and --d must be positive");
  const VerificationReport r =
      gtable(n, d, m, seed_given ? std::optional<std::uint64_t>(o.seed) : std::nullopt, field_of(o));
  if (o.json_output) return emit_report(o, r);
  std::ostringstream os;
  os << "  n  d  m         G  bound d^(n2^(m-1))  status\n";
  for (const auto& inst : r.instances()) {
    const auto& v = inst.values;
    char line[160];
    const std::string bound = inst.bound.contains("d^(n2^(m-1))") ? inst.bound["d^(n2^(m-1))"].dump() : "-";
    std::snprintf(line, sizeof line, "%3s %2s %2s %9s  %18s  %s\n", v.value("n", json()).dump().c_str(),
                  v.value("d", json()).dump().c_str(), v.value("m", json()).dump().c_str(),
                  v.value("G", json()).dump().c_str(), bound.c_str(), to_string(inst.status).c_str());
    os << line;
    if (inst.witness) os << "    witness: " << *inst.witness << '\n';
  }
  os << "gtable: " << to_string(r.status()) << '\n';
  emit(o, os.str());
  return exit_code(r.status());
}

template <class K>
RandomIdealShape cli_shape(bool homogeneous) {
  RandomIdealShape shape;
  shape.nvars = 3;
  shape.homogeneous = homogeneous;
  shape.min_degree = homogeneous ? 2 : 1;
  shape.max_generators = homogeneous ? 4 : 3;
  return shape;
}

template <class K>
int cmd_verify_regflat(const Options& o) {
  const GRange d = parse_range(o.d_range, "d");
  if (d.lo == 0) throw UsageError("--d must be positive");
  VerificationReport report("regflat", field_of(o), o.ideal_path.empty() ? std::optional(o.seed) : std::nullopt);
  std::vector<IdealPresentation<K>> ideals;
  if (!o.ideal_path.empty()) {
    const IdealFile file = load_ideal(o);
    report = VerificationReport("regflat", file.ring.field());
    ideals.push_back(to_presentation<K>(file));
    require_homogeneous(ideals.back());
  } else {
    for (unsigned t = 0; t < o.trials; ++t) {
      Rng rng(trial_seed(o.seed, t));
      ideals.push_back(random_ideal<K>(cli_shape<K>(true), rng, field_of(o)));
    }
  }
  for (const auto& I : ideals) {
    for (unsigned dd = d.lo; dd <= d.hi; ++dd) check_flat_betti_into(report, I, dd);
  }
  return emit_report(o, report);
}

template <class K>
int cmd_verify_poweli(const Options& o) {
  VerificationReport report("poweli", field_of(o), o.ideal_path.empty() ? std::optional(o.seed) : std::nullopt);
  if (!o.ideal_path.empty()) {
    const IdealFile file = load_ideal(o);
    const auto J = to_presentation<K>(file);
    report = VerificationReport("poweli", file.ring.field());
    std::vector<unsigned> degrees;
    if (!o.dvec.empty()) {
      std::stringstream ss(o.dvec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const GRange e = parse_range(item, "dvec");
        if (e.lo != e.hi || e.lo == 0) throw UsageError("--dvec expects positive integers");
        degrees.push_back(e.lo);
      }
    } else {
      const GRange d = parse_range(o.d_range, "d");
      if (d.lo != d.hi || d.lo == 0) throw UsageError("--d must be a single positive value here");
      degrees.assign(file.ring.nvars(), d.lo);
    }
    if (degrees.size() != file.ring.nvars()) {
      throw UsageError("--dvec needs " + std::to_string(file.ring.nvars()) + " entries");
    }
    verify_poweli_into(report, J, PowerMap(degrees), file.ring.kept());
  } else {
    for (unsigned t = 0; t < o.trials; ++t) {
      Rng rng(trial_seed(o.seed, t));
      const auto J = random_ideal<K>(cli_shape<K>(false), rng, field_of(o));
      const PowerMap phi = random_power_map(3, 3, rng);
      verify_poweli_into(report, J, phi, static_cast<std::size_t>(rng.between(1, 2)));
    }
  }
  return emit_report(o, report);
}

template <class K>
int cmd_verify_regbound(const Options& o) {
  VerificationReport report("regbound", field_of(o), o.ideal_path.empty() ? std::optional(o.seed) : std::nullopt);
  if (!o.ideal_path.empty()) {
    const IdealFile file = load_ideal(o);
    if (file.ring.kept() == file.ring.nvars()) {
      throw UsageError("regbound needs 'order elim k' in the ideal file to name the eliminated variables");
    }
    const auto J = to_presentation<K>(file);
    require_homogeneous(J);
    report = VerificationReport("regbound", file.ring.field());
    verify_regbound_into(report, J, file.ring.kept());
  } else {
    for (unsigned t = 0; t < o.trials; ++t) {
      Rng rng(trial_seed(o.seed, t));
      RandomIdealShape shape = cli_shape<K>(true);
      shape.nvars = static_cast<std::size_t>(rng.between(3, 4));
      const auto J = random_ideal<K>(shape, rng, field_of(o));
      const auto keep = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(shape.nvars) - 1));
      verify_regbound_into(report, J, keep);
    }
  }
  return emit_report(o, report);
}

template <class K>
int cmd_verify_main(const Options& o) {
  VerificationReport report("main", field_of(o), o.param_path.empty() ? std::optional(o.seed) : std::nullopt);
  if (!o.param_path.empty()) {
    const auto p = to_parametrisation<K>(load_param(o));
    report = VerificationReport("main", p.field);
    verify_main_into(report, p);
    return emit_report(o, report);
  }
  const GRange n = parse_range(o.n_range, "n"), m = parse_range(o.m_range, "m"), d = parse_range(o.d_range, "d");
  if (n.lo == 0 || m.lo == 0 || d.lo == 0) throw UsageError("--n, --m and --d must be positive");
  std::uint64_t index = 0;
  for (unsigned nn = n.lo; nn <= n.hi; ++nn) {
    for (unsigned mm = m.lo; mm <= m.hi; ++mm) {
      for (unsigned dd = d.lo; dd <= d.hi; ++dd) {
        for (unsigned t = 0; t < o.trials; ++t) {
          verify_main_into(report, random_parametrisation<K>(nn, mm, dd, trial_seed(o.seed, index++), field_of(o)));
        }
      }
    }
  }
  return emit_report(o, report);
}

template <class K>
int dispatch(const std::string& command, const std::string& check, const Options& o, bool seed_given) {
  if (command == "kernel") return cmd_kernel<K>(o);
  if (command == "reg") return cmd_reg<K>(o);
  if (command == "lex") return cmd_lex<K>(o);
  if (command == "gtable") return cmd_gtable(o, seed_given);
  if (check == "regflat") return cmd_verify_regflat<K>(o);
  if (check == "poweli") return cmd_verify_poweli<K>(o);
  if (check == "regbound") return cmd_verify_regbound<K>(o);
  return cmd_verify_main<K>(o);
}

// The field an input file asks for, when --char does not override it.
bool wants_rationals(const Options& o) {
  if (o.characteristic) return *o.characteristic == 0;
  if (!o.ideal_path.empty()) return parse_ideal_file(read_file(o.ideal_path)).ring.field().is_rational();
  if (!o.param_path.empty()) return parse_param_file(read_file(o.param_path)).field.is_rational();
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regcert: Groebner bases, Betti tables, regularity and lex-segment ideals"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--char", o.characteristic, "Field characteristic: 0 or a prime (default 32003)");
    sub->add_flag("--json", o.json_output, "Machine-readable output");
    sub->add_option("--out", o.out_path, "Write output to FILE");
  };

  auto* kernel = app.add_subcommand("kernel", "Kernel of a parametrisation");
  kernel->add_option("--param", o.param_path, "Parametrisation file");
  kernel->add_option("--order", o.order, "lex or elim");
  kernel->add_option("--n", o.n_range, "Number of forms (random instance)");
  kernel->add_option("--m", o.m_range, "Number of source variables (random instance)");
  kernel->add_option("--d", o.d_range, "Degree of the forms (random instance)");
  kernel->add_option("--seed", o.seed, "Seed for the random instance");
  add_common(kernel);

  auto* reg = app.add_subcommand("reg", "Betti table and regularity of a homogeneous ideal");
  reg->add_option("--ideal", o.ideal_path, "Ideal file")->required();
  reg->add_option("--order", o.order, "Order for parsing the file: lex, degrevlex or elim");
  reg->add_option("--cutoff", o.cutoff, "Largest internal degree to compute");
  add_common(reg);

  auto* lex = app.add_subcommand("lex", "Lex-segment ideal with the same Hilbert function");
  lex->add_option("--ideal", o.ideal_path, "Ideal file")->required();
  lex->add_option("--order", o.order, "Order for parsing the file: lex, degrevlex or elim");
  lex->add_option("--cutoff", o.cutoff, "Largest degree of the Hilbert function to examine");
  add_common(lex);

  auto* gt = app.add_subcommand("gtable", "G_{n,d,m} and the bound d^(n2^(m-1))");
  gt->add_option("--n", o.n_range, "n or A..B")->required();
  gt->add_option("--d", o.d_range, "d or A..B")->required();
  gt->add_option("--m", o.m_range, "m or A..B")->required();
  auto* gt_seed = gt->add_option("--seed", o.seed, "Also compare with J' built from random f");
  add_common(gt);

  auto* verify = app.add_subcommand("verify", "Run a verification check");
  verify->require_subcommand(1);
  const auto add_verify = [&](const std::string& name, const std::string& help) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--seed", o.seed, "Seed for random instances");
    sub->add_option("--trials", o.trials, "Random instances per shape");
    add_common(sub);
    return sub;
  };
  auto* regflat = add_verify("regflat", "Betti tables under x_i -> x_i^d");
  regflat->add_option("--ideal", o.ideal_path, "Ideal file (default: random instances)");
  regflat->add_option("--d", o.d_range, "d or A..B")->default_str("2");
  auto* poweli = add_verify("poweli", "Power maps and Groebner bases / elimination");
  poweli->add_option("--ideal", o.ideal_path, "Ideal file; 'order elim k' fixes the subring");
  poweli->add_option("--dvec", o.dvec, "Exponents d_1,...,d_l");
  poweli->add_option("--d", o.d_range, "Uniform exponent when --dvec is absent");
  auto* regbound = add_verify("regbound", "reg(I) <= reg(in I) <= reg(in J) <= reg(Lex J)");
  regbound->add_option("--ideal", o.ideal_path, "Ideal file with 'order elim k'");
  auto* vmain = add_verify("main", "Full chain for parametrised varieties");
  vmain->add_option("--param", o.param_path, "Parametrisation file (default: random instances)");
  vmain->add_option("--n", o.n_range, "n or A..B");
  vmain->add_option("--m", o.m_range, "m or A..B");
  vmain->add_option("--d", o.d_range, "d or A..B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::string command, check;
  for (auto* sub : {kernel, reg, lex, gt, verify}) {
    if (sub->parsed()) command = sub->get_name();
  }
  for (auto* sub : {regflat, poweli, regbound, vmain}) {
    if (sub->parsed()) check = sub->get_name();
  }

  try {
    return wants_rationals(o) ? dispatch<Rational>(command, check, o, gt_seed->count() > 0)
                              : dispatch<Zp>(command, check, o, gt_seed->count() > 0);
  } catch (const ParseError& e) {
    std::cerr << "regcert: " << (o.ideal_path.empty() ? o.param_path : o.ideal_path) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "regcert: " << e.what() << '\n';
    return kUsage;
  } catch (const InconclusiveError& e) {
    std::cerr << "regcert: inconclusive: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "regcert: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "regcert: " << e.what() << '\n';
    return kUsage;
  }
}
