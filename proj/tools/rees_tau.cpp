// rees_tau: command-line front end.
//
//   rees_tau sing      FILE [--point c1,c2,...]
//   rees_tau saturate  FILE [--mode absolute|relative]
//   rees_tau tau       FILE [--point c1,c2,...]
//   rees_tau eliminate FILE [--route universal|z-free] [--mode ...] [bounds]
//   rees_tau verify    DIR
//
// Exit status: 0 success, 1 computational refutation, 2 input error.
#include <iostream>

#include "CLI11.hpp"
#include "reestau.hpp"

using namespace reestau;

namespace {

struct Flags {
  std::string route = "universal";
  std::string mode = "absolute";
  std::uint32_t weight_bound = 0;
  std::uint32_t degree_bound = 8;
  std::uint32_t k_max = 4;
  std::string point;
  bool quiet = false;
};

std::vector<Scalar> parse_point(const std::string& text, const RingPtr& R) {
  if (text.empty()) return {};
  std::vector<Scalar> out;
  for (const auto& part : detail::split(text, ',')) {
    mpq_class q;
    if (part.empty() || q.set_str(part, 10) != 0) throw ParseError("bad coordinate '" + part + "' in --point", 0);
    q.canonicalize();
    if (R->field().is_prime_field() && q.get_den() % R->field().characteristic() == 0)
      throw ParseError("coordinate '" + part + "' has a denominator divisible by p", 0);
    out.emplace_back(R->field(), q);
  }
  if (out.size() != R->dim())
    throw ParseError("--point has " + std::to_string(out.size()) + " coordinates, ring has " +
                         std::to_string(R->dim()),
                     0);
  return out;
}

ReesAlgebra saturated(const ReesAlgebra& g, const std::string& mode) {
  return mode == "relative" ? rel_diff_saturate(g) : diff_saturate(g);
}

int run_sing(const AlgFile& a, const Flags& fl) {
  auto pt = parse_point(fl.point, a.ring);
  if (!pt.empty() || !a.ring->field().is_prime_field()) {
    if (pt.empty()) pt = origin(a.ring);
    bool in = in_sing_locus(a.algebra, pt);
    if (fl.quiet) std::cout << (in ? "1" : "0") << "\n";
    else std::cout << "sing-report\npoint: " << format_vector(pt) << "\nin-sing: " << (in ? "yes" : "no") << "\n";
    return 0;
  }
  auto pts = enumerate_sing(a.algebra);
  if (fl.quiet) {
    std::cout << pts.size() << "\n";
    return 0;
  }
  std::cout << "sing-report\nfield: " << a.ring->field().name() << "\nvars: " << join_vars(*a.ring) << "\npoints:\n";
  for (const auto& p : pts) std::cout << "  " << format_vector(p) << "\n";
  std::cout << "count = " << pts.size() << "\n";
  return 0;
}

int run_saturate(const AlgFile& a, const Flags& fl) {
  ReesAlgebra s = saturated(a.algebra, fl.mode);
  if (!fl.quiet) std::cout << "saturation: " << to_string(s.saturation()) << "\ngenerators:\n";
  for (const auto& e : s.gens()) std::cout << (fl.quiet ? "" : "  ") << to_string(e) << "\n";
  return 0;
}

int run_tau(const AlgFile& a, const Flags& fl) {
  auto pt = parse_point(fl.point, a.ring);
  if (fl.quiet) std::cout << tau(a.algebra, pt) << "\n";
  else std::cout << tau_report(a.algebra, pt);
  return 0;
}

ElimBounds bounds_of(const Flags& fl) {
  ElimBounds b;
  b.weight_bound = fl.weight_bound;
  b.degree_bound = fl.degree_bound;
  return b;
}

int run_eliminate(const AlgFile& a, const Flags& fl) {
  ReesAlgebra s = saturated(a.algebra, fl.mode);
  Route route = fl.route == "z-free" ? Route::z_free : Route::universal;
  DropMode mode = fl.mode == "relative" ? DropMode::relative_only : DropMode::absolute;
  ElimOutcome o = elim_report(s, route, mode, bounds_of(fl));
  if (fl.quiet) {
    auto at = o.report.find("verdict: ");
    std::string v = o.report.substr(at + 9);
    std::cout << v.substr(0, v.find(' ')) << "\n";
  } else {
    std::cout << o.report;
  }
  return o.refuted ? 1 : 0;
}

int run_verify(const std::string& dir, const Flags& fl) {
  auto suite = load_suite(dir);
  VerifyOptions opt;
  opt.bounds = bounds_of(fl);
  opt.k_max = fl.k_max;
  bool ok = true;
  for (const auto& r : run_acceptance(suite, opt)) {
    ok = ok && r.pass;
    if (fl.quiet) continue;
    std::cout << format_result(r) << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees algebras, differential saturation, tau and elimination"};
  app.require_subcommand(1);
  Flags fl;
  std::string input;
  auto common = [&](CLI::App* c, const char* what) {
    c->add_option("input", input, what)->required();
    c->add_flag("--quiet", fl.quiet, "Print only the final value");
  };
  auto* sing = app.add_subcommand("sing", "Singular locus: test a point or enumerate over F_p");
  common(sing, "Algebra file");
  sing->add_option("--point", fl.point, "Comma-separated coordinates");
  auto* sat = app.add_subcommand("saturate", "Differential saturation");
  common(sat, "Algebra file");
  auto* ta = app.add_subcommand("tau", "tau-invariant report");
  common(ta, "Algebra file");
  ta->add_option("--point", fl.point, "Comma-separated coordinates");
  auto* el = app.add_subcommand("eliminate", "Elimination algebra and tau drop");
  common(el, "Algebra file");
  el->add_option("--route", fl.route, "universal or z-free")->check(CLI::IsMember({"universal", "z-free"}));
  el->add_option("--weight-bound", fl.weight_bound, "z-free weight bound (0: twice the weight lcm)");
  for (auto* c : {sat, el})
    c->add_option("--mode", fl.mode, "absolute or relative")->check(CLI::IsMember({"absolute", "relative"}));
  auto* ve = app.add_subcommand("verify", "Run the acceptance checks over a directory of algebra files");
  common(ve, "Suite directory");
  ve->add_option("--weight-bound", fl.weight_bound, "z-free weight bound (0: twice the weight lcm)");
  ve->add_option("--kmax", fl.k_max, "Radical certificate search depth");
  for (auto* c : {el, ve}) c->add_option("--degree-bound", fl.degree_bound, "Truncation degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (ve->parsed()) return run_verify(input, fl);
    AlgFile a = load_alg_file(input);
    if (sing->parsed()) return run_sing(a, fl);
    if (sat->parsed()) return run_saturate(a, fl);
    if (ta->parsed()) return run_tau(a, fl);
    return run_eliminate(a, fl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
