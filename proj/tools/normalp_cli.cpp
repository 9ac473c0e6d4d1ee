// Command-line front end. Talks to the library only through normalp.h.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normalp/normalp.h"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kCap = 2, kCertificate = 3 };

struct GroupDeleter {
  void operator()(normalp_group* g) const { normalp_group_free(g); }
};
struct WitnessDeleter {
  void operator()(normalp_witness* w) const { normalp_witness_free(w); }
};
struct HomologyDeleter {
  void operator()(normalp_homology* h) const { normalp_homology_free(h); }
};
using GroupPtr = std::unique_ptr<normalp_group, GroupDeleter>;
using WitnessPtr = std::unique_ptr<normalp_witness, WitnessDeleter>;
using HomologyPtr = std::unique_ptr<normalp_homology, HomologyDeleter>;

int fail(normalp_status status) {
  std::cerr << "error: " << normalp_last_error() << '\n';
  return status == NORMALP_E_CAP_EXCEEDED ? kCap : kUsage;
}

const char* yes_no(int flag) { return flag ? "true" : "false"; }

std::string images_string(const normalp_group* g, std::size_t index) {
  std::vector<uint32_t> images(normalp_group_degree(g));
  normalp_group_generator(g, index, images.data());
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < images.size(); ++i) out << (i ? ", " : "") << images[i];
  out << ']';
  return out.str();
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

int load_group(const std::string& path, const normalp_limits& limits, GroupPtr& out) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << '\n';
    return kUsage;
  }
  normalp_group* raw = nullptr;
  if (auto st = normalp_group_read_document(text.c_str(), &limits, &raw); st != NORMALP_OK) return fail(st);
  out.reset(raw);
  return kOk;
}

void print_classification(const normalp_classification& c) {
  std::cout << "n: " << c.n << '\n'
            << "p: " << c.p << '\n'
            << "s: " << c.s << '\n'
            << "m: " << c.m << '\n'
            << "verdict: " << normalp_verdict_name(c.verdict) << '\n'
            << "valuation_needed: " << c.valuation_needed << '\n'
            << "valuation_available: " << c.valuation_available << '\n'
            << "solvability_guarantee: " << normalp_guarantee_name(c.guarantee) << '\n';
}

bool passes_filter(const std::string& only, normalp_verdict v) {
  if (only == "all") return true;
  if (only == "forced") {
    return v == NORMALP_P_GROUP || v == NORMALP_FORCED_ALL_GROUPS || v == NORMALP_FORCED_SOLVABLE_ONLY;
  }
  if (only == "witness") return v == NORMALP_WITNESS_EXISTS || v == NORMALP_UNIQUE_SOLVABLE_WITNESS;
  if (only == "unique") return v == NORMALP_UNIQUE_SOLVABLE_WITNESS;
  if (only == "pgroup") return v == NORMALP_P_GROUP;
  return false;
}

int cmd_classify(uint64_t n, uint64_t p) {
  normalp_classification c{};
  if (auto st = normalp_classify(n, p, &c); st != NORMALP_OK) return fail(st);
  print_classification(c);
  return kOk;
}

int cmd_sieve(uint64_t p, uint64_t lo, uint64_t hi, const std::string& only, bool table) {
  normalp_classification* rows = nullptr;
  std::size_t count = 0;
  if (auto st = normalp_sieve(p, lo, hi, &rows, &count); st != NORMALP_OK) return fail(st);
  std::unique_ptr<normalp_classification, void (*)(normalp_classification*)> guard(rows,
                                                                                   normalp_classifications_free);
  if (table) {
    std::cout << std::left << std::setw(12) << "n" << std::setw(6) << "s" << std::setw(12) << "m"
              << std::setw(26) << "verdict" << std::setw(8) << "needed" << std::setw(11) << "available"
              << "guarantee" << '\n';
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = rows[i];
    if (!passes_filter(only, c.verdict)) continue;
    if (table) {
      std::cout << std::left << std::setw(12) << c.n << std::setw(6) << c.s << std::setw(12) << c.m
                << std::setw(26) << normalp_verdict_name(c.verdict) << std::setw(8) << c.valuation_needed
                << std::setw(11) << c.valuation_available << normalp_guarantee_name(c.guarantee) << '\n';
    } else {
      std::cout << "n=" << c.n << " s=" << c.s << " m=" << c.m << " verdict=" << normalp_verdict_name(c.verdict)
                << " needed=" << c.valuation_needed << " available=" << c.valuation_available
                << " guarantee=" << normalp_guarantee_name(c.guarantee) << '\n';
    }
  }
  return kOk;
}

int cmd_construct(uint64_t n, uint64_t p, const std::string& out_path, const std::string& name,
                  const normalp_limits& limits) {
  normalp_classification c{};
  if (auto st = normalp_classify(n, p, &c); st != NORMALP_OK) return fail(st);
  normalp_witness* raw = nullptr;
  if (auto st = normalp_witness_construct(n, p, &limits, &raw); st != NORMALP_OK) {
    if (st == NORMALP_E_PRECONDITION) {
      std::cerr << "refused: " << normalp_last_error() << '\n';
      return kUsage;
    }
    return fail(st);
  }
  WitnessPtr witness(raw);
  const normalp_group* group = normalp_witness_group(witness.get());
  const normalp_certificate cert = normalp_witness_certificate(witness.get());
  int valid = 0;
  if (auto st = normalp_witness_verify(witness.get(), &valid); st != NORMALP_OK) return fail(st);

  char* text = nullptr;
  const std::string label = name.empty() ? "witness_" + std::to_string(n) + "_" + std::to_string(p) : name;
  if (auto st = normalp_group_write_document(group, label.c_str(), &text); st != NORMALP_OK) return fail(st);
  const std::string document(text);
  normalp_string_free(text);

  std::cout << "n: " << cert.n << '\n'
            << "p: " << cert.p << '\n'
            << "s: " << cert.s << '\n'
            << "m: " << cert.m << '\n'
            << "verdict: " << normalp_verdict_name(c.verdict) << '\n'
            << "degree: " << normalp_group_degree(group) << '\n'
            << "order: " << normalp_group_order(group) << '\n'
            << "order_ok: " << yes_no(cert.order_ok) << '\n'
            << "p_core_trivial: " << yes_no(cert.p_core_trivial) << '\n'
            << "solvable: " << yes_no(cert.solvable) << '\n'
            << "transitive_on_k: " << yes_no(cert.transitive_on_k) << '\n'
            << "point_stabilizer_is_sylow: " << yes_no(cert.point_stabilizer_is_sylow) << '\n'
            << "certificate: " << (valid ? "valid" : "invalid") << '\n';
  if (out_path.empty()) {
    std::cout << "document:\n" << document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << document)) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
    std::cout << "document: " << out_path << '\n';
  }
  return valid ? kOk : kCertificate;
}

int cmd_pcore(const std::string& path, uint64_t p, const normalp_limits& limits) {
  GroupPtr group;
  if (int rc = load_group(path, limits, group); rc != kOk) return rc;
  normalp_group* raw = nullptr;
  if (auto st = normalp_group_p_core(group.get(), p, &raw); st != NORMALP_OK) return fail(st);
  GroupPtr core(raw);
  std::cout << "p: " << p << '\n'
            << "group_order: " << normalp_group_order(group.get()) << '\n'
            << "p_core_order: " << normalp_group_order(core.get()) << '\n'
            << "generator_count: " << normalp_group_generator_count(core.get()) << '\n';
  for (std::size_t i = 0; i < normalp_group_generator_count(core.get()); ++i) {
    std::cout << "generator: " << images_string(core.get(), i) << '\n';
  }
  return kOk;
}

int cmd_quillen(const std::string& path, uint64_t p, std::size_t poset_cap, const normalp_limits& limits) {
  GroupPtr group;
  if (int rc = load_group(path, limits, group); rc != kOk) return rc;
  normalp_homology* raw = nullptr;
  if (auto st = normalp_quillen(group.get(), p, poset_cap, &raw); st != NORMALP_OK) return fail(st);
  HomologyPtr h(raw);
  const std::size_t dims = normalp_homology_dimension_count(h.get());
  std::cout << "p: " << p << '\n'
            << "group_order: " << normalp_group_order(group.get()) << '\n'
            << "poset_size: " << normalp_homology_poset_size(h.get()) << '\n'
            << "empty: " << yes_no(normalp_homology_empty(h.get())) << '\n'
            << "dimensions: " << dims << '\n';
  for (std::size_t d = 0; d < dims; ++d) {
    std::cout << "faces_" << d << ": " << normalp_homology_face_count(h.get(), d) << '\n';
  }
  for (std::size_t d = 0; d < dims; ++d) {
    std::cout << "betti_" << d << ": " << normalp_homology_betti(h.get(), d) << '\n';
    std::cout << "torsion_" << d << ":";
    const std::size_t k = normalp_homology_torsion_count(h.get(), d);
    if (k == 0) std::cout << " none";
    for (std::size_t i = 0; i < k; ++i) {
      char* value = nullptr;
      if (normalp_homology_torsion(h.get(), d, i, &value) == NORMALP_OK) {
        std::cout << ' ' << value;
        normalp_string_free(value);
      }
    }
    std::cout << '\n';
  }
  const int connected = normalp_homology_connected(h.get());
  const int acyclic = normalp_homology_acyclic(h.get());
  std::cout << "components: " << normalp_homology_components(h.get()) << '\n'
            << "connected: " << yes_no(connected) << '\n'
            << "acyclic: " << yes_no(acyclic) << '\n'
            << "connected_not_acyclic: " << yes_no(connected && !acyclic) << '\n'
            << "reduced_euler: " << normalp_homology_euler_from_faces(h.get()) << '\n'
            << "note: acyclic means all reduced integral homology vanishes; contractibility is not decided\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group orders, normal p-subgroups, witnesses and p-subgroup complexes"};
  app.require_subcommand(1);

  const normalp_limits defaults = normalp_default_limits();
  normalp_limits limits = defaults;
  std::size_t poset_cap = 5000;

  uint64_t n = 0, p = 0, lo = 0, hi = 0;
  std::string only = "all", out_path, name, file;
  bool table = false;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--order-cap", limits.order_cap, "Largest group order accepted")->capture_default_str();
    cmd->add_option("--table-cap", limits.table_cap, "Largest group given an element table")
        ->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "Classify the order n with respect to the prime p");
  classify->add_option("n", n, "Group order")->required();
  classify->add_option("p", p, "Prime")->required();

  auto* sieve = app.add_subcommand("sieve", "Classify every multiple of p in [lo, hi]");
  sieve->add_option("p", p, "Prime")->required();
  sieve->add_option("lo", lo, "Lower bound")->required();
  sieve->add_option("hi", hi, "Upper bound")->required();
  sieve->add_option("--only", only, "Verdict filter")
      ->check(CLI::IsMember({"all", "forced", "witness", "unique", "pgroup"}));
  sieve->add_flag("--table", table, "Aligned human-readable table");

  auto* construct = app.add_subcommand("construct", "Build a group of order n with trivial p-core");
  construct->add_option("n", n, "Group order")->required();
  construct->add_option("p", p, "Prime")->required();
  construct->add_option("--out", out_path, "Write the group document here");
  construct->add_option("--name", name, "Name stored in the group document");
  add_caps(construct);

  auto* pcore = app.add_subcommand("pcore", "Largest normal p-subgroup of a stored group");
  pcore->add_option("file", file, "Group document")->required();
  pcore->add_option("p", p, "Prime")->required();
  add_caps(pcore);

  auto* quillen = app.add_subcommand("quillen", "Reduced homology of the complex of nontrivial p-subgroups");
  quillen->add_option("file", file, "Group document")->required();
  quillen->add_option("p", p, "Prime")->required();
  quillen->add_option("--poset-cap", poset_cap, "Largest number of p-subgroups")->capture_default_str();
  add_caps(quillen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (classify->parsed()) return cmd_classify(n, p);
  if (sieve->parsed()) return cmd_sieve(p, lo, hi, only, table);
  if (construct->parsed()) return cmd_construct(n, p, out_path, name, limits);
  if (pcore->parsed()) return cmd_pcore(file, p, limits);
  if (quillen->parsed()) return cmd_quillen(file, p, poset_cap, limits);
  return kUsage;
}
