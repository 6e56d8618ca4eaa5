#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinpair/coupling.hpp"
#include "spinpair/verify.hpp"

namespace {

using nlohmann::json;
using namespace spinpair;

json to_json(const Rotor& r) { return json::array({r.w, r.x, r.y, r.z}); }
json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }
json to_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }
json to_json(const Frame& f) {
  return json{{"x", to_json(f.x)}, {"y", to_json(f.y)}, {"z", to_json(f.z)}};
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Vec3 parse_vec3(const std::string& text) {
  Vec3 v{};
  std::istringstream is(text);
  std::string part;
  int i = 0;
  while (std::getline(is, part, ',')) {
    if (i >= 3) throw std::domain_error("expected three components: " + text);
    v[i++] = std::stod(part);
  }
  if (i != 3) throw std::domain_error("expected three components: " + text);
  return v;
}

std::vector<HalfSpin> parse_spins(const std::vector<std::string>& texts) {
  std::vector<HalfSpin> spins;
  for (const std::string& t : texts) spins.push_back(HalfSpin::parse(t));
  if (spins.empty()) throw std::domain_error("at least one spin is required");
  return spins;
}

struct SweepRow {
  HalfSpin spin;
  std::string construction;
  SweepStats stats;
};

int run_phases(const std::vector<std::string>& spin_texts, int trials,
               std::uint64_t seed, const std::string& output) {
  const std::vector<HalfSpin> spins = parse_spins(spin_texts);
  std::vector<SweepRow> rows;
  for (HalfSpin s : spins) {
    rows.push_back({s, "labeled", run_labeled_phase_sweep(s, trials, seed, true)});
    rows.push_back({s, "symmetric", run_symmetric_phase_sweep(s, trials, seed, true)});
  }
  if (output == "json") {
    json doc = json::array();
    for (const SweepRow& r : rows) {
      doc.push_back(json{{"spin", r.spin.str()},
                         {"construction", r.construction},
                         {"trials", r.stats.trials},
                         {"expected_phase", to_json(r.stats.expected)},
                         {"mean_dev", r.stats.mean_dev},
                         {"max_dev", r.stats.max_dev},
                         {"mean_ratio_dev", r.stats.mean_ratio_dev},
                         {"max_ratio_dev", r.stats.max_ratio_dev}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "spin\tconstruction\ttrials\texpected_re\texpected_im\t"
                 "mean_dev\tmax_dev\tmean_ratio_dev\tmax_ratio_dev\n";
    for (const SweepRow& r : rows) {
      std::cout << r.spin.str() << "\t" << r.construction << "\t"
                << r.stats.trials << "\t" << num(r.stats.expected.real()) << "\t"
                << num(r.stats.expected.imag()) << "\t" << num(r.stats.mean_dev)
                << "\t" << num(r.stats.max_dev) << "\t"
                << num(r.stats.mean_ratio_dev) << "\t"
                << num(r.stats.max_ratio_dev) << "\n";
    }
  }
  return 0;
}

int run_exclusion(const std::vector<std::string>& spin_texts, const Vec3& p,
                  int sign, const std::string& output) {
  const std::vector<HalfSpin> spins = parse_spins(spin_texts);
  const QLabels q{{"kind", "x"}};
  if (output == "json") {
    json doc = json::array();
    for (HalfSpin s : spins) {
      json rows = json::array();
      for (const ExclusionRow& row : exclusion_report(q, p, s, identity_rotor(), sign)) {
        rows.push_back(json{{"S", row.S.str()},
                            {"norm", row.norm_value},
                            {"status", row.allowed ? "allowed" : "excluded"}});
      }
      doc.push_back(json{{"spin", s.str()}, {"rows", rows}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "spin\tS\tnorm\tstatus\n";
    for (HalfSpin s : spins) {
      for (const ExclusionRow& row : exclusion_report(q, p, s, identity_rotor(), sign)) {
        std::cout << s.str() << "\t" << row.S.str() << "\t" << num(row.norm_value)
                  << "\t" << (row.allowed ? "allowed" : "excluded") << "\n";
      }
    }
  }
  return 0;
}

int run_frames(const Vec3& va_raw, const Vec3& vb_raw, const std::string& output) {
  const Vec3 va = normalize(va_raw);
  const Vec3 vb = normalize(vb_raw);
  if (norm(cross(va, vb)) <= kDegenerateCross) {
    throw DegenerateGeometryError(
        "directions are coincident or antiparallel: no unique bisecting geometry");
  }
  const PairGeometry g = pair_geometry(va, vb);
  const auto [pa, pb] = parallel_frames(va, vb);
  const auto [ba, bb] = bisecting_frames(va, vb);
  const Rotor plus = relating_rotor(g, 1);
  const Rotor minus = relating_rotor(g, -1);
  if (output == "json") {
    json doc{{"v_a", to_json(g.v_a)},
             {"v_b", to_json(g.v_b)},
             {"k", to_json(g.k)},
             {"theta", g.theta},
             {"parallel_frames", json{{"a", to_json(pa)}, {"b", to_json(pb)}}},
             {"bisecting_frames", json{{"a", to_json(ba)}, {"b", to_json(bb)}}},
             {"relating_rotor_plus", to_json(plus)},
             {"relating_rotor_minus", to_json(minus)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    auto line = [](const std::string& name, const Vec3& v) {
      std::cout << name << "\t" << num(v[0]) << "\t" << num(v[1]) << "\t"
                << num(v[2]) << "\n";
    };
    line("v_a", g.v_a);
    line("v_b", g.v_b);
    line("k", g.k);
    std::cout << "theta\t" << num(g.theta) << "\n";
    line("parallel_a_x", pa.x);
    line("parallel_a_y", pa.y);
    line("parallel_a_z", pa.z);
    line("parallel_b_x", pb.x);
    line("parallel_b_y", pb.y);
    line("parallel_b_z", pb.z);
    line("bisecting_a_x", ba.x);
    line("bisecting_a_y", ba.y);
    line("bisecting_a_z", ba.z);
    line("bisecting_b_x", bb.x);
    line("bisecting_b_y", bb.y);
    line("bisecting_b_z", bb.z);
    std::cout << "relating_rotor_plus\t" << num(plus.w) << "\t" << num(plus.x)
              << "\t" << num(plus.y) << "\t" << num(plus.z) << "\n";
    std::cout << "relating_rotor_minus\t" << num(minus.w) << "\t" << num(minus.x)
              << "\t" << num(minus.y) << "\t" << num(minus.z) << "\n";
  }
  return 0;
}

int run_orderfree(int entities, int states, const std::string& output) {
  const OrderFreeEnumeration e = enumerate_order_free(entities, states);
  if (output == "json") {
    json doc{{"entities", entities},
             {"states", states},
             {"count", e.count},
             {"occupancies", e.occupancies}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "count\t" << e.count << "\n";
    for (const auto& occ : e.occupancies) {
      std::cout << "occupancy";
      for (int c : occ) std::cout << "\t" << c;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_verify_cmd(std::uint64_t seed, const std::string& output) {
  const std::vector<CheckResult> results = run_verify(seed);
  bool all_pass = true;
  if (output == "json") {
    json doc = json::array();
    for (const CheckResult& r : results) {
      all_pass = all_pass && r.pass;
      doc.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      all_pass = all_pass && r.pass;
      std::cout << (r.pass ? "ok" : "FAIL") << "\t" << r.name;
      if (!r.detail.empty()) std::cout << "\t" << r.detail;
      std::cout << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-pair state constructions: exchange phases from relative 2pi "
               "rotations, exclusion tables from total-spin coupling"};
  app.require_subcommand(1);

  std::vector<std::string> spin_texts;
  int trials = 100;
  std::uint64_t seed = 1;
  int sign = 1;
  std::string output = "json";
  std::string va_text = "0,0,1";
  std::string vb_text;
  int entities = 2;
  int states = 2;

  CLI::App* phases = app.add_subcommand(
      "phases", "Exchange-phase deviation table over random geometries");
  phases->add_option("--spins", spin_texts, "Spins, e.g. 0 1/2 1 3/2")->required();
  phases->add_option("--trials", trials, "Random geometries per spin")
      ->check(CLI::PositiveNumber);
  phases->add_option("--seed", seed, "Sweep seed");
  phases->add_option("--output", output)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* exclusion = app.add_subcommand(
      "exclusion", "Total-spin occupation table for an identical pair");
  exclusion->add_option("--spins", spin_texts, "Spins, e.g. 1/2 1 3/2")->required();
  exclusion->add_option("--va", va_text, "Common momentum, e.g. 0,0,1");
  exclusion->add_option("--sign", sign, "Relating-rotor sign")
      ->check(CLI::IsMember({1, -1}));
  exclusion->add_option("--output", output)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* frames = app.add_subcommand(
      "frames", "Pair geometry, parallel/bisecting frames, relating rotors");
  frames->add_option("--va", va_text, "First direction, e.g. 1,0,0")->required();
  frames->add_option("--vb", vb_text, "Second direction")->required();
  frames->add_option("--output", output)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* orderfree = app.add_subcommand(
      "orderfree", "Count multisets of entity states (order-free descriptions)");
  orderfree->add_option("--entities", entities)->check(CLI::PositiveNumber);
  orderfree->add_option("--states", states)->check(CLI::PositiveNumber);
  orderfree->add_option("--output", output)->check(CLI::IsMember({"json", "tsv"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Run every library invariant check; nonzero exit on failure");
  verify->add_option("--seed", seed, "Check seed");
  verify->add_option("--output", output)->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (phases->parsed()) return run_phases(spin_texts, trials, seed, output);
    if (exclusion->parsed())
      return run_exclusion(spin_texts, parse_vec3(va_text), sign, output);
    if (frames->parsed())
      return run_frames(parse_vec3(va_text), parse_vec3(vb_text), output);
    if (orderfree->parsed()) return run_orderfree(entities, states, output);
    return run_verify_cmd(seed, output);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
