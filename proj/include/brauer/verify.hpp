#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauer/enumerate.hpp"
#include "brauer/tree.hpp"
#include "json.hpp"

namespace brauer {

struct VerificationReport {
  std::string check;
  std::string instance;
  bool passed = false;
  nlohmann::json evidence = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

[[nodiscard]] nlohmann::json to_json(const VerificationReport& r);

// End(T(E \ {i})) over A_G, rebuilt as a tree from its Cartan matrix and
// quiver, must be mutate(G, i) with identical edge labels; the tilting checks
// and the closed-form Cartan matrix must agree as well.
[[nodiscard]] VerificationReport verify_main(const BrauerTree& t, EdgeId i);
[[nodiscard]] VerificationReport verify_cartan(const BrauerTree& t);
[[nodiscard]] VerificationReport verify_braid(const TreeFamily& family);
[[nodiscard]] VerificationReport verify_to_star(const BrauerTree& t, VertexIndex v);
// reconstruct(cartan_formula(G), ext_formula(G)) must be G with its labels.
[[nodiscard]] VerificationReport verify_reconstruct(const BrauerTree& t);
[[nodiscard]] VerificationReport verify_counts(int n, std::optional<int> multiplicity);

// Published counts of Brauer trees up to unlabeled isomorphism.
[[nodiscard]] std::optional<std::size_t> expected_tree_count(int n, std::optional<int> multiplicity);

struct SweepSummary {
  std::string check;
  std::size_t instances = 0;
  std::vector<VerificationReport> failures;
  nlohmann::json totals = nlohmann::json::object();
  double elapsed_ms = 0.0;

  [[nodiscard]] bool passed() const { return instances > 0 && failures.empty(); }
};

[[nodiscard]] nlohmann::json to_json(const SweepSummary& s);

// Families for n = 1..max_edges: no exceptional vertex, then one exceptional
// vertex of multiplicity m = 2..max_mult placed everywhere.
[[nodiscard]] std::vector<TreeFamily> sweep_families(int max_edges, int max_mult, IsoMode mode);

[[nodiscard]] SweepSummary sweep_main(int max_edges, int max_mult, IsoMode mode = IsoMode::Unlabeled);
[[nodiscard]] SweepSummary sweep_cartan(int max_edges, int max_mult, IsoMode mode = IsoMode::Unlabeled);
[[nodiscard]] SweepSummary sweep_braid(int max_edges, int max_mult, IsoMode mode = IsoMode::Unlabeled);
[[nodiscard]] SweepSummary sweep_to_star(int max_edges, int max_mult, IsoMode mode = IsoMode::Unlabeled);
[[nodiscard]] SweepSummary sweep_reconstruct(int max_edges, int max_mult, IsoMode mode = IsoMode::Unlabeled);
[[nodiscard]] SweepSummary sweep_counts(int max_edges, int max_mult);

}  // namespace brauer
