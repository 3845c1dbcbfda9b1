#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrloc/cohomology.hpp"

namespace rrloc {

/// Compact connected rank-one group acting on M. All three have a one-dimensional maximal torus.
enum class GroupKind { U1, SU2, SO3 };

std::string to_string(GroupKind g);
/// Accepts "U1", "SU2", "SO3" (case-insensitive, "U(1)" style also accepted).
GroupKind parse_group(std::string_view text);

/// One connected component F of the torus-fixed set with its localization data.
struct FixedComponent {
  std::string name;
  PresentationPtr ring;
  long moment = 0;                            // weight of the torus on the fibre of L over F
  std::vector<int> weights;                   // normal weights beta_{F,j}
  std::vector<CohomologyClass> normal_chern;  // c_1 of the normal line bundles, one per weight
  CohomologyClass omega;                      // nilpotent part of the symplectic class on F
  CohomologyClass todd;                       // Td(TF)

  /// Isolated fixed point with trivial cohomological data.
  static FixedComponent isolated(std::string name, long moment, std::vector<int> weights);

  [[nodiscard]] bool is_isolated() const { return ring->is_point(); }
  /// Sum of the positive weights.
  [[nodiscard]] int n_plus() const;
  /// Sum of the absolute values of the negative weights.
  [[nodiscard]] int n_minus() const;
};

struct ProblemInstance {
  GroupKind group = GroupKind::U1;
  std::vector<FixedComponent> components;

  /// lcm(4, |beta| over all weights, 2 for SU2): one cyclotomic field holds every pole and i.
  [[nodiscard]] int conductor() const;
  /// Half the real dimension of M, read off from any component (dim F + #weights).
  [[nodiscard]] int complex_dimension() const;
  [[nodiscard]] const FixedComponent& component(std::string_view name) const;
};

enum class Severity { Info, Warn, Error };
std::string to_string(Severity s);

struct Finding {
  Severity severity = Severity::Info;
  std::string code;
  std::string component;  // empty for instance-wide findings
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Structured validation: ERROR for data that breaks the construction (zero moments, zero
/// weights, malformed classes, asymmetric Weyl data), WARN when the rank-one hypotheses for the
/// quantization identity fail, INFO for quasi-free actions.
std::vector<Finding> validate(const ProblemInstance& p);

bool has_errors(const std::vector<Finding>& findings);
/// No ERROR and no WARN.
bool hypotheses_hold(const std::vector<Finding>& findings);

/// Exponents k in [0, N) with (zeta_N^k)^beta = 1 for some weight beta of f. Always contains 0.
std::vector<int> wall_set(const FixedComponent& f, int conductor);

/// Replaces L by L^k: moments and omega scale by k.
ProblemInstance tensor_power(const ProblemInstance& p, int k);

struct CatalogEntry {
  std::string name;
  std::string description;
  int default_k;
  int min_k;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Built-in worked example; k selects the power of the entry's base line bundle.
/// Throws InputError for an unknown name or out-of-range k.
ProblemInstance catalog(std::string_view name, std::optional<int> k = std::nullopt);

}  // namespace rrloc
