#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "kreweras/bump.hpp"
#include "kreweras/enumeration.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/growth.hpp"
#include "kreweras/json_io.hpp"
#include "kreweras/svg.hpp"
#include "kreweras/verify.hpp"
#include "kreweras/web.hpp"
#include "kreweras/word.hpp"

namespace {

using namespace kreweras;
using nlohmann::json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Promotion, evacuation, bump diagrams, growth diagrams and webs for Kreweras words"};
  app.require_subcommand(1);

  // count
  auto* cmd_count = app.add_subcommand("count", "closed-form counts");
  int count_n = 0;
  bool count_connected = false, count_webs = false, count_cwebs = false;
  cmd_count->add_option("--n", count_n, "word size parameter")->required();
  cmd_count->add_flag("--connected", count_connected, "count connected words");
  cmd_count->add_flag("--webs", count_webs, "count Kreweras webs");
  cmd_count->add_flag("--connected-webs", count_cwebs, "count connected Kreweras webs");
  cmd_count->callback([&] {
    if (count_connected)
      std::cout << connected_count(count_n) << "\n";
    else if (count_cwebs)
      std::cout << connected_web_count(count_n) << "\n";
    else if (count_webs)
      std::cout << series_identity_check(std::max(count_n, 1)).web_counts[count_n] << "\n";
    else
      std::cout << kreweras_count(count_n) << "\n";
  });

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "enumerate words in lexicographic order");
  int gen_n = 0;
  bool gen_connected = false, gen_json = false;
  cmd_gen->add_option("--n", gen_n, "word size parameter")->required();
  cmd_gen->add_flag("--connected", gen_connected, "only connected words");
  cmd_gen->add_flag("--json", gen_json, "emit a JSON array");
  cmd_gen->callback([&] {
    json arr = json::array();
    for_each_word(gen_n, [&](const KrewerasWord& w) {
      if (gen_connected && (w.empty() || !is_connected(w))) return;
      if (gen_json)
        arr.push_back(word_to_json(w));
      else
        std::cout << w.str() << "\n";
    });
    if (gen_json) std::cout << arr.dump(2) << "\n";
  });

  // promote
  auto* cmd_promote = app.add_subcommand("promote", "apply promotion");
  std::string promote_word;
  int promote_steps = 1;
  cmd_promote->add_option("--word", promote_word, "Kreweras word")->required();
  cmd_promote->add_option("--steps", promote_steps, "number of steps (negative for inverse)");
  cmd_promote->callback([&] {
    KrewerasWord w = KrewerasWord::parse(promote_word);
    for (int i = 0; i < promote_steps; ++i) w = promote(w);
    for (int i = 0; i > promote_steps; --i) w = promote_inverse(w);
    std::cout << w.str() << "\n";
  });

  // evacuate
  auto* cmd_evac = app.add_subcommand("evacuate", "apply evacuation");
  std::string evac_word;
  bool evac_dual = false;
  cmd_evac->add_option("--word", evac_word, "Kreweras word")->required();
  cmd_evac->add_flag("--dual", evac_dual, "dual evacuation");
  cmd_evac->callback([&] {
    KrewerasWord w = KrewerasWord::parse(evac_word);
    std::cout << (evac_dual ? dual_evacuate(w) : evacuate(w)).str() << "\n";
  });

  // orbit
  auto* cmd_orbit = app.add_subcommand("orbit", "promotion orbit");
  std::string orbit_word;
  bool orbit_json = false;
  cmd_orbit->add_option("--word", orbit_word, "Kreweras word")->required();
  cmd_orbit->add_flag("--json", orbit_json, "emit JSON");
  cmd_orbit->callback([&] {
    std::vector<KrewerasWord> orb = orbit(KrewerasWord::parse(orbit_word));
    if (orbit_json) {
      json arr = json::array();
      for (const KrewerasWord& w : orb) arr.push_back(w.str());
      std::cout << json{{"size", orb.size()}, {"orbit", arr}}.dump(2) << "\n";
    } else {
      for (const KrewerasWord& w : orb) std::cout << w.str() << "\n";
    }
  });

  // bump
  auto* cmd_bump = app.add_subcommand("bump", "Kreweras bump diagram");
  std::string bump_word, bump_svg;
  bool bump_json = false;
  cmd_bump->add_option("--word", bump_word, "Kreweras word")->required();
  cmd_bump->add_flag("--json", bump_json, "emit JSON");
  cmd_bump->add_option("--svg", bump_svg, "write an SVG rendering to this path");
  cmd_bump->callback([&] {
    BumpDiagram d = bump_diagram(KrewerasWord::parse(bump_word));
    if (!bump_svg.empty()) write_file(bump_svg, bump_to_svg(d));
    if (bump_json || bump_svg.empty()) std::cout << bump_to_json(d).dump(2) << "\n";
  });

  // growth
  auto* cmd_growth = app.add_subcommand("growth", "decorated growth diagram window");
  std::string growth_word;
  int growth_rows = 0;
  bool growth_json = false;
  cmd_growth->add_option("--word", growth_word, "Kreweras word")->required();
  cmd_growth->add_option("--rows", growth_rows, "rows to generate (default 3n)");
  cmd_growth->add_flag("--json", growth_json, "emit JSON instead of text");
  cmd_growth->callback([&] {
    KrewerasWord w = KrewerasWord::parse(growth_word);
    int rows = growth_rows > 0 ? growth_rows : std::max(1, w.size());
    GrowthWindow g = growth_window(w, rows);
    std::cout << (growth_json ? growth_to_json(g).dump(2) + "\n" : growth_to_text(g));
  });

  // web
  auto* cmd_web = app.add_subcommand("web", "the web of a word");
  std::string web_word, web_svg;
  bool web_json = false;
  std::uint64_t web_seed = 0;
  cmd_web->add_option("--word", web_word, "Kreweras word")->required();
  cmd_web->add_flag("--json", web_json, "emit JSON");
  cmd_web->add_option("--svg", web_svg, "write an SVG rendering to this path");
  cmd_web->add_option("--seed", web_seed, "layout seed for the SVG");
  cmd_web->callback([&] {
    auto [w, coloring] = web_from_word(KrewerasWord::parse(web_word));
    if (!web_svg.empty()) write_file(web_svg, web_to_svg(w, &coloring, web_seed));
    if (web_json || web_svg.empty()) std::cout << web_to_json(w, &coloring).dump(2) << "\n";
  });

  // recover
  auto* cmd_recover = app.add_subcommand("recover", "recover all words of a web");
  std::string recover_in = "-";
  bool recover_json = false;
  cmd_recover->add_option("--in", recover_in, "web JSON file, or - for stdin");
  cmd_recover->add_flag("--json", recover_json, "emit JSON");
  cmd_recover->callback([&] {
    Web w = web_from_json(json::parse(read_input(recover_in)));
    std::vector<KrewerasWord> words = recover_words(w);
    if (recover_json) {
      json arr = json::array();
      for (const KrewerasWord& u : words) arr.push_back(u.str());
      std::cout << json{{"kappa", components(w)}, {"count", words.size()}, {"words", arr}}.dump(2)
                << "\n";
    } else {
      for (const KrewerasWord& u : words) std::cout << u.str() << "\n";
    }
  });

  // csp
  auto* cmd_csp = app.add_subcommand("csp", "cyclic sieving check");
  int csp_n = 1;
  bool csp_json = false;
  cmd_csp->add_option("--n", csp_n, "word size parameter")->required();
  cmd_csp->add_flag("--json", csp_json, "emit JSON");
  bool csp_failed = false;
  cmd_csp->callback([&] {
    CspReport rep = csp_check(csp_n);
    if (csp_json) {
      json hist = json::object();
      for (const auto& [size, cnt] : rep.orbit_histogram) hist[std::to_string(size)] = cnt;
      std::cout << json{{"n", rep.n},
                        {"pass", rep.pass},
                        {"f", rep.f.to_string()},
                        {"orbit_histogram", hist}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "f(q) = " << rep.f.to_string() << "\n";
      std::cout << "orbits:";
      for (const auto& [size, cnt] : rep.orbit_histogram)
        std::cout << " " << cnt << " of size " << size;
      std::cout << "\n" << (rep.pass ? "PASS" : "FAIL") << ": orbit-sum congruence mod q^"
                << 6 * csp_n << "-1\n";
    }
    csp_failed = !rep.pass;
  });

  // evac-fixed
  auto* cmd_ef = app.add_subcommand("evac-fixed", "evacuation fixed-point counts");
  int ef_n = 1;
  bool ef_json = false;
  cmd_ef->add_option("--n", ef_n, "word size parameter")->required();
  cmd_ef->add_flag("--json", ef_json, "emit JSON");
  bool ef_failed = false;
  cmd_ef->callback([&] {
    EvacFixedReport rep = evac_fixed_check(ef_n);
    if (ef_json) {
      std::cout << json{{"n", rep.n},
                        {"formula", rep.formula.str()},
                        {"dual_evac_fixed", rep.dual_evac_fixed.str()},
                        {"evac_fixed", rep.evac_fixed.str()},
                        {"pass", rep.pass}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "formula: " << rep.formula << ", evac*-fixed: " << rep.dual_evac_fixed
                << ", evac-fixed: " << rep.evac_fixed << " -> " << (rep.pass ? "PASS" : "FAIL")
                << "\n";
    }
    ef_failed = !rep.pass;
  });

  // order-poly
  auto* cmd_op = app.add_subcommand("order-poly", "order polynomial of V(n)");
  int op_n = 1;
  long long op_m = 0;
  bool op_check = false;
  cmd_op->add_option("--n", op_n, "word size parameter")->required();
  cmd_op->add_option("--m", op_m, "height")->required();
  cmd_op->add_flag("--check", op_check, "also run the P-partition count");
  bool op_failed = false;
  cmd_op->callback([&] {
    BigInt formula = order_polynomial(op_n, op_m);
    std::cout << formula << "\n";
    if (op_check) {
      BigInt dp = ppartition_count(op_n, op_m);
      if (dp != formula) {
        std::cout << "P-partition count " << dp << " disagrees\n";
        op_failed = true;
      }
    }
  });

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  VerifyOptions opt;
  cmd_verify
      ->add_option("suite", suite,
                   "one of promotion|trips|growth|webs|enumeration|csp|evac|all")
      ->required();
  cmd_verify->add_option("--max-n", opt.max_n, "exhaustive depth (default 3)");
  cmd_verify->add_option("--samples", opt.samples, "random samples beyond the exhaustive depth");
  cmd_verify->add_option("--seed", opt.seed, "sampling seed");
  bool verify_failed = false;
  cmd_verify->callback([&] {
    for (const CheckResult& r : verify_suite(suite, opt)) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
      if (!r.pass) verify_failed = true;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return (verify_failed || csp_failed || ef_failed || op_failed) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
