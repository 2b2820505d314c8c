#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isolab/iso/group.hpp"
#include "isolab/nf/normal_form.hpp"
#include "isolab/theories/json_io.hpp"

namespace isolab::iso {

/// Enumeration bounds: indeterminate occurrences and word length (letters
/// plus non-unit constants).
struct Bounds {
  std::size_t max_x = 2;
  std::size_t max_length = 7;
};

/// One normal form per sort of the ambient theory; entry C lives in M⟨x_C⟩.
using Family = std::vector<nf::NormalForm>;

struct OpInfo {
  std::string name;
  std::vector<std::size_t> args;
  std::size_t result = 0;
};

/// The operations of an ambient theory computed on normal forms, together
/// with the probe elements used to test sequents semantically. A probe
/// context is M with one or two fresh points adjoined; its probes of a sort
/// are the constants plus one-letter words with at most one non-unit flank.
class IsotropyEngine {
 public:
  virtual ~IsotropyEngine() = default;

  const std::vector<std::string>& sorts() const noexcept { return sorts_; }
  const std::vector<OpInfo>& ops() const noexcept { return ops_; }
  std::size_t context_count() const noexcept { return context_names_.size(); }
  const std::string& context_name(std::size_t k) const { return context_names_.at(k); }
  const std::vector<nf::NormalForm>& probes(std::size_t context, std::size_t sort) const {
    return probes_.at(context).at(sort);
  }

  /// x_C as an element of M⟨x_C⟩.
  virtual nf::NormalForm generic(std::size_t sort) const = 0;
  /// Normal forms of M⟨x_C⟩ within bounds, ordered by (x-count, length,
  /// element ids). With `unit_degree`, only words of degree ±1.
  virtual std::vector<nf::NormalForm> candidates(std::size_t sort, const Bounds& b,
                                                 bool unit_degree) const = 0;
  /// Multiplicative under substitution, so invertible words have degree ±1.
  virtual std::int64_t degree(const nf::NormalForm& u) const = 0;
  /// s[v/x]: s is over M⟨x_C⟩, v any element of sort C in a probe context.
  virtual nf::NormalForm substitute(const nf::NormalForm& s, const nf::NormalForm& v) const = 0;
  /// The operation on normal forms; nullopt where it is undefined.
  virtual std::optional<nf::NormalForm> apply(std::size_t op,
                                              std::span<const nf::NormalForm> args) const = 0;
  virtual std::string format(const nf::NormalForm& u) const = 0;
  std::string format(const Family& f) const;

 protected:
  std::vector<std::string> sorts_;
  std::vector<OpInfo> ops_;
  std::vector<std::string> context_names_;
  std::vector<std::vector<std::vector<nf::NormalForm>>> probes_;  // [context][sort]
};

/// Brute-force engine for the data's theory. Throws Error when there is no
/// normal-form engine (categories, crossed modules, symmetric monoidal).
std::unique_ptr<IsotropyEngine> make_isotropy_engine(const theories::TaggedData& data);

struct DefInnReport {
  bool ok = true;
  std::string condition;  // e.g. "commutes generically with mul"
  std::string witness;
};

/// Checks generic commutation and definedness reflection for every
/// operation on all probe tuples, then searches for a substitution inverse
/// per sort within `inverse_search`.
DefInnReport check_definable_inner(const IsotropyEngine& engine, const Family& candidate,
                                   const Bounds& inverse_search = {});

struct IsotropyResult {
  std::vector<Family> elements;  // identity first
  std::optional<GroupTable> group;
  /// Products under substitution that fall outside the enumerated set.
  std::vector<std::string> escapes;
  std::size_t candidates = 0;
};

/// Enumerates families within bounds, keeps those in DefInn, and closes
/// them under the substitution product [t]·[s] = [t[s/x]]. Candidate
/// filtering uses up to ISOLAB_THREADS threads; the result is deterministic.
IsotropyResult brute_force_isotropy(const IsotropyEngine& engine, const Bounds& bounds);

/// The known answer for each kind of data: Inv(M) for monoids, G for groups
/// and crossed modules A -> G, the Picard group for strict monoidal
/// categories, Aut(Id_J) for presheaves over J, Inv(Z(M)) for M-sets, and
/// the trivial group for commutative monoids, symmetric strict monoidal
/// categories and presheaves over rigid J. Throws Error for other kinds.
GroupTable closed_form_isotropy(const theories::TaggedData& data);

/// θ(a) = (a ⊗ x_O ⊗ a⁻¹, id(a) ⊗ x_A ⊗ id(a⁻¹)); a must be invertible.
Family theta(const theories::FiniteStrictMonCat& c, theories::Elem a);
/// Reads a off an object component of the form a ⊗ x_O ⊗ b.
theories::Elem sigma(const theories::FiniteStrictMonCat& c, const Family& e);

}  // namespace isolab::iso
