#ifndef MUSICO_SEARCH_H
#define MUSICO_SEARCH_H

#include <cstddef>
#include <string>
#include <vector>

#include "musico/assignment.h"

namespace musico {

/// Tone sequence whose consecutive members must sit on Edges.
struct ToneCycle {
  std::string label;
  std::vector<Tone> tones;
  bool cyclic = true;
};

ToneCycle chromatic_cycle(bool cyclic = true);
ToneCycle pythagorean_cycle(bool cyclic = true);
ToneCycle whole_tone_cycle(Tone start, bool cyclic = true);

struct ConstraintSet {
  std::vector<ToneCycle> cycles;
  bool symmetry_required = false;  // demand P_2 in the symmetry group

  std::string describe() const;
};

struct EquivalenceClass {
  CanonicalKey key;
  Assignment representative;  // the assignment whose word is the key
  std::size_t members = 0;
};

struct EnumerationResult {
  std::vector<Assignment> assignments;  // sorted by word
  std::vector<EquivalenceClass> classes;  // sorted by key

  std::size_t raw_count() const { return assignments.size(); }
  std::size_t class_count() const { return classes.size(); }
};

/// Full backtracking embedding search. threads <= 0 uses the hardware count.
EnumerationResult enumerate(const ConstraintSet& c, int threads = 0);

/// Groups assignments into isomorphism classes.
EnumerationResult collect(std::vector<Assignment> assignments);

/// Circulant demand "X adjacent to X+1 and X+2 for all X".
ConstraintSet prohibition_constraints();
EnumerationResult prohibition_search();

struct RelaxedCount {
  std::string name;
  std::size_t raw = 0;
  std::size_t classes = 0;
};

/// Relaxations of the prohibition demand with their counts.
std::vector<RelaxedCount> prohibition_relaxations();

/// Every assignment with P_2 in the symmetry group.
EnumerationResult enumerate_hexagon_symmetric();

/// Labels the 12 hexagon-symmetric classes; throws if a pair cannot be separated.
ReferenceTypes derive_reference_types();

/// Cached result of derive_reference_types().
const ReferenceTypes& reference_types();

Family family_of(const Assignment& a);

}  // namespace musico

#endif  // MUSICO_SEARCH_H
