#include "rrloc/fixedpoint.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "rrloc/errors.hpp"

namespace rrloc {

std::string to_string(GroupKind g) {
  switch (g) {
    case GroupKind::U1: return "U1";
    case GroupKind::SU2: return "SU2";
    case GroupKind::SO3: return "SO3";
  }
  return "?";
}

GroupKind parse_group(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(c)));
  }
  if (s == "U1") return GroupKind::U1;
  if (s == "SU2") return GroupKind::SU2;
  if (s == "SO3") return GroupKind::SO3;
  throw InputError("unknown group '" + std::string(text) + "' (expected U1, SU2 or SO3)");
}

std::string to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "INFO";
    case Severity::Warn: return "WARN";
    case Severity::Error: return "ERROR";
  }
  return "?";
}

FixedComponent FixedComponent::isolated(std::string name, long moment, std::vector<int> weights) {
  FixedComponent f;
  f.name = std::move(name);
  f.ring = RingPresentation::point();
  f.moment = moment;
  f.weights = std::move(weights);
  f.normal_chern.assign(f.weights.size(), CohomologyClass(f.ring));
  f.omega = CohomologyClass(f.ring);
  f.todd = CohomologyClass(f.ring, ExactScalar(1));
  return f;
}

int FixedComponent::n_plus() const {
  int n = 0;
  for (int b : weights) {
    if (b > 0) n += b;
  }
  return n;
}

int FixedComponent::n_minus() const {
  int n = 0;
  for (int b : weights) {
    if (b < 0) n -= b;
  }
  return n;
}

int ProblemInstance::conductor() const {
  int n = 4;
  for (const auto& f : components) {
    for (int b : f.weights) {
      if (b != 0) n = std::lcm(n, std::abs(b));
    }
  }
  if (group == GroupKind::SU2) n = std::lcm(n, 2);
  return n;
}

int ProblemInstance::complex_dimension() const {
  if (components.empty()) return 0;
  const auto& f = components.front();
  return (f.ring ? f.ring->top_degree() / 2 : 0) + static_cast<int>(f.weights.size());
}

const FixedComponent& ProblemInstance::component(std::string_view name) const {
  for (const auto& f : components) {
    if (f.name == name) return f;
  }
  throw InputError("no component named '" + std::string(name) + "'");
}

namespace {

void add(std::vector<Finding>& out, Severity s, std::string code, std::string component,
         std::string message) {
  out.push_back(Finding{s, std::move(code), std::move(component), std::move(message)});
}

bool same_ring(const CohomologyClass& c, const PresentationPtr& ring) {
  return c.ring() && (c.ring() == ring || *c.ring() == *ring);
}

}  // namespace

std::vector<Finding> validate(const ProblemInstance& p) {
  std::vector<Finding> out;
  if (p.components.empty()) {
    add(out, Severity::Error, "empty-instance", "", "the instance has no fixed components");
    return out;
  }

  std::set<std::string> names;
  bool quasi_free = true;
  for (const auto& f : p.components) {
    if (!names.insert(f.name).second) {
      add(out, Severity::Error, "duplicate-name", f.name, "component name is not unique");
    }
    if (!f.ring) {
      add(out, Severity::Error, "missing-ring", f.name, "component has no ring presentation");
      continue;
    }
    if (f.moment == 0) {
      add(out, Severity::Error, "zero-moment", f.name,
          "moment value is 0: 0 would not be a regular value of the moment map");
    }
    for (int b : f.weights) {
      if (b == 0) add(out, Severity::Error, "zero-weight", f.name, "normal weight 0 (torus fixes a normal direction)");
      if (std::abs(b) != 1) quasi_free = false;
    }
    if (f.weights.size() != f.normal_chern.size()) {
      add(out, Severity::Error, "weight-chern-mismatch", f.name,
          "number of normal Chern classes differs from number of weights");
    }
    for (std::size_t j = 0; j < f.normal_chern.size(); ++j) {
      const auto& c = f.normal_chern[j];
      if (!same_ring(c, f.ring)) {
        add(out, Severity::Error, "ring-mismatch", f.name, "normal Chern class over a different ring");
      } else if (!c.is_nilpotent()) {
        add(out, Severity::Error, "chern-not-nilpotent", f.name,
            "normal Chern class " + std::to_string(j) + " has a nonzero constant term");
      }
    }
    if (!same_ring(f.omega, f.ring)) {
      add(out, Severity::Error, "ring-mismatch", f.name, "omega over a different ring");
    } else if (!f.omega.is_nilpotent()) {
      add(out, Severity::Error, "omega-not-nilpotent", f.name, "omega has a nonzero constant term");
    }
    if (!same_ring(f.todd, f.ring)) {
      add(out, Severity::Error, "ring-mismatch", f.name, "Todd class over a different ring");
    } else if (!(f.todd.constant_term() == ExactScalar(1))) {
      add(out, Severity::Error, "todd-constant", f.name, "Todd class must have constant term 1");
    }
  }

  const int dim = p.complex_dimension();
  for (const auto& f : p.components) {
    if (f.ring && f.ring->top_degree() / 2 + static_cast<int>(f.weights.size()) != dim) {
      add(out, Severity::Warn, "dimension-mismatch", f.name,
          "dim F + number of normal weights differs from other components");
    }
  }

  if (quasi_free) {
    add(out, Severity::Info, "quasi-free", "", "all normal weights are +-1: the circle action is quasi-free");
  }

  if (p.group != GroupKind::U1) {
    std::multiset<long> moments;
    for (const auto& f : p.components) moments.insert(f.moment);
    for (const auto& f : p.components) {
      if (moments.count(f.moment) != moments.count(-f.moment)) {
        add(out, Severity::Error, "weyl-asymmetry", f.name,
            "no matching component with moment " + std::to_string(-f.moment));
      }
    }
  }

  if (p.group == GroupKind::SO3) {
    const bool large = std::any_of(p.components.begin(), p.components.end(),
                                   [](const FixedComponent& f) { return std::abs(f.moment) > 1; });
    if (!large) {
      add(out, Severity::Warn, "so3-small-moments", "",
          "no component with |moment| > 1; the SO(3) identity is not guaranteed (replace L by L^k, k >= 2)");
    }
  }
  if (p.group == GroupKind::SU2) {
    const bool large = std::any_of(p.components.begin(), p.components.end(),
                                   [](const FixedComponent& f) { return std::abs(f.moment) > 2; });
    if (!large) {
      add(out, Severity::Warn, "su2-small-moments", "",
          "no component with |moment| > 2; the SU(2) identity is not guaranteed (replace L by L^k, k >= 3)");
    }
    for (const auto& f : p.components) {
      if ((f.moment == 1 && f.n_plus() == 1) || (f.moment == -1 && f.n_minus() == 1)) {
        add(out, Severity::Warn, "su2-exceptional-component", f.name,
            "moment +-1 with n_+- = 1 is excluded for SU(2)");
      }
    }
  }
  return out;
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Error; });
}

bool hypotheses_hold(const std::vector<Finding>& findings) {
  return std::none_of(findings.begin(), findings.end(),
                      [](const Finding& f) { return f.severity != Severity::Info; });
}

std::vector<int> wall_set(const FixedComponent& f, int conductor) {
  std::vector<int> out;
  for (int k = 0; k < conductor; ++k) {
    const bool on_wall = std::any_of(f.weights.begin(), f.weights.end(), [&](int b) {
      return b != 0 && (static_cast<long>(k) * b) % conductor == 0;
    });
    if (on_wall || k == 0) out.push_back(k);
  }
  return out;
}

ProblemInstance tensor_power(const ProblemInstance& p, int k) {
  if (k < 1) throw InputError("tensor power must be at least 1");
  ProblemInstance out = p;
  for (auto& f : out.components) {
    f.moment *= k;
    f.omega *= ExactScalar(k);
  }
  return out;
}

namespace {

// Projective space with the circle acting on homogeneous coordinate i with weight w[i] and the
// line bundle O(degree) linearized so that the fibre over the vertex i has weight
// degree*w[i] - shift. Fixed points are isolated when the w[i] are distinct.
ProblemInstance projective_space(GroupKind group, const std::vector<int>& w, long degree, long shift) {
  ProblemInstance p;
  p.group = group;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<int> weights;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j != i) weights.push_back(w[i] - w[j]);
    }
    p.components.push_back(
        FixedComponent::isolated("p" + std::to_string(i), degree * w[i] - shift, std::move(weights)));
  }
  return p;
}

ProblemInstance cp1_k(int k) {
  if (k % 2 == 0) return projective_space(GroupKind::U1, {0, 1}, k, k / 2);
  // Half-integral moments: pass to the double cover of the circle.
  return projective_space(GroupKind::U1, {0, 2}, k, k);
}

ProblemInstance cp1xcp1(int k) {
  auto line = RingPresentation::projective_line("x");
  const CohomologyClass x = CohomologyClass::monomial(line, {1});
  const CohomologyClass one(line, ExactScalar(1));
  ProblemInstance p;
  p.group = GroupKind::U1;
  for (int sign : {1, -1}) {
    FixedComponent f;
    f.name = sign > 0 ? "north-x-cp1" : "south-x-cp1";
    f.ring = line;
    f.moment = sign * k;
    f.weights = {sign};
    f.normal_chern = {CohomologyClass(line)};
    f.omega = x * ExactScalar(k);
    f.todd = one + x;
    p.components.push_back(std::move(f));
  }
  return p;
}

ProblemInstance cp2_line(int k) {
  auto line = RingPresentation::projective_line("x");
  const CohomologyClass x = CohomologyClass::monomial(line, {1});
  FixedComponent l;
  l.name = "line";
  l.ring = line;
  l.moment = -k;
  l.weights = {-1};
  l.normal_chern = {x};
  l.omega = x * ExactScalar(2 * k);
  l.todd = CohomologyClass(line, ExactScalar(1)) + x;
  ProblemInstance p;
  p.group = GroupKind::U1;
  p.components.push_back(std::move(l));
  p.components.push_back(FixedComponent::isolated("p2", k, {1, 1}));
  return p;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"cp1-k", "CP^1 with O(k), symmetric linearization (double cover of the circle for odd k)", 2, 0},
      {"cp1-double", "CP^1, circle acting with weights +-2, moments +-k", 1, 1},
      {"cp1-triple", "CP^1, circle acting with weights +-3, moments (2k, -k)", 1, 1},
      {"cp2-k", "CP^2, circle weights (0,1,2), O(3k), moments (-2k, k, 4k)", 1, 1},
      {"cp2-line", "CP^2, circle weights (0,0,1), O(2k); a fixed line and a fixed point", 1, 1},
      {"cp1xcp1", "CP^1 x CP^1, circle rotating the first factor, O(2k) x O(k)", 1, 1},
      {"so3-coadjoint", "SO(3) on the coadjoint sphere, moments +-k", 2, 1},
      {"su2-cp1", "SU(2) on CP^1 with O(k), weights +-2, moments +-k", 1, 1},
      {"su2-exceptional", "formal SU(2) data with weights +-1, moments +-k", 1, 1},
  };
  return entries;
}

ProblemInstance catalog(std::string_view name, std::optional<int> k_opt) {
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw InputError("unknown catalog entry '" + std::string(name) + "'");
  const int k = k_opt.value_or(it->default_k);
  if (k < it->min_k) {
    throw InputError("catalog entry '" + it->name + "' needs k >= " + std::to_string(it->min_k));
  }
  if (name == "cp1-k") return cp1_k(k);
  if (name == "cp1-double") return projective_space(GroupKind::U1, {0, 2}, k, k);
  if (name == "cp1-triple") return projective_space(GroupKind::U1, {0, 3}, k, k);
  if (name == "cp2-k") return projective_space(GroupKind::U1, {0, 1, 2}, 3L * k, 2L * k);
  if (name == "cp2-line") return cp2_line(k);
  if (name == "cp1xcp1") return cp1xcp1(k);
  if (name == "so3-coadjoint") return projective_space(GroupKind::SO3, {0, 1}, 2L * k, k);
  if (name == "su2-cp1") return projective_space(GroupKind::SU2, {0, 2}, k, k);
  return projective_space(GroupKind::SU2, {0, 1}, 2L * k, k);  // su2-exceptional
}

}  // namespace rrloc
