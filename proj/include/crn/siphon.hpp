#ifndef CRN_SIPHON_HPP
#define CRN_SIPHON_HPP

#include <stdexcept>
#include <vector>

#include "crn/structure.hpp"

namespace crn {

/// True iff every reaction producing a species of I also consumes one.
bool is_semilocking(const Network& net, const SpeciesSet& members);

/// True iff every reaction's reactant complex intersects I.
bool is_locking(const Network& net, const SpeciesSet& members);

/// A semi-locking set is critical when it contains no support of a
/// semi-conservation vector.
bool is_critical(const Network& net, const SpeciesSet& members);

/// Whether a semi-conservation vector with support exactly I exists. This is
/// the stronger predicate needed for the empty-J certificate route; a
/// non-critical set may only satisfy the weaker containment form.
bool has_full_support_conservation(const Network& net, const SpeciesSet& members);

struct SiphonRecord {
  SpeciesSet members;
  bool locking = false;
  bool critical = false;
  bool trivial = false;  // I = all species
  bool full_support_conservation = false;
  FaceGeometry geometry;
};

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::size_t cap)
      : std::runtime_error("siphon enumeration overflow: species count exceeds cap " +
                           std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// All (or only inclusion-minimal) semi-locking sets, classified, ordered by
/// size then lexicographically. Throws EnumerationOverflow above species_cap.
std::vector<SiphonRecord> enumerate_siphons(const Network& net, bool minimal_only = false,
                                            std::size_t species_cap = 20);

/// Whether two distinct critical locking sets are nested (reported for
/// comparison with earlier persistence criteria; never gates the verdict).
bool has_nested_critical_locking_sets(const Network& net,
                                      const std::vector<SiphonRecord>& siphons);

}  // namespace crn

#endif
