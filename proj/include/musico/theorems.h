#ifndef MUSICO_THEOREMS_H
#define MUSICO_THEOREMS_H

#include <utility>
#include <vector>

#include "musico/check.h"
#include "musico/search.h"

namespace musico {

/// Classification of the triangle on which three tones sit.
TriangleKind triad_kind(const Assignment& a, const TriadTones& t);

enum class ApexClass : std::uint8_t { Hexagon, Hexagram };

/// Transposition class of {0,n,m}, so (4,7), (3,8) and (5,9) coincide.
ToneSet triad_shape(int n, int m);

/// (n, m) with 0<n<m<12 such that for every listed type and every X,
/// (X, X+n, X+m) has the given shape with its apex tone in the apex class.
std::vector<std::pair<int, int>> uniqueness_scan(const ReferenceTypes& refs, const std::vector<TypeLabel>& types,
                                                 TriangleShape shape, ApexClass apex);

CheckResult check_symmetry_group();
CheckResult check_triangle_census();
CheckResult check_prohibition_lemma();
CheckResult check_enumeration_counts();
CheckResult check_fundamental_hexatonic();

CheckResult check_golden_theorem(const ReferenceTypes& refs = reference_types());
CheckResult check_golden_theorem_2(const ReferenceTypes& refs = reference_types());
CheckResult check_golden_duality(const ReferenceTypes& refs = reference_types());
CheckResult check_triad_uniqueness(const ReferenceTypes& refs = reference_types());
CheckResult check_tritone_and_messiaen(const ReferenceTypes& refs = reference_types());
CheckResult check_hexagon_symmetry_and_type_map(const ReferenceTypes& refs = reference_types());

/// As stated: one two-fold rotation serves every root.
CheckResult check_major_minor_duality(const ReferenceTypes& refs = reference_types());
/// Weaker form: every root has some rotation.
CheckResult check_major_minor_duality_by_rotation(const ReferenceTypes& refs = reference_types());

CheckResult check_gregorian_duality(const ReferenceTypes& refs = reference_types());
CheckResult check_chromatic_pythagorean_duality(const ReferenceTypes& refs = reference_types());

/// As stated: roots fixed to whole-tone classes, swapped between 1*,4* and 2*,3*.
CheckResult check_self_duality(const ReferenceTypes& refs = reference_types());
/// Roots taken relative to each type's hexagon.
CheckResult check_self_duality_by_hexagon(const ReferenceTypes& refs = reference_types());
CheckResult check_red_lines(const ReferenceTypes& refs = reference_types());
CheckResult check_tone_below_c(const ReferenceTypes& refs = reference_types());

/// Every check that reads the reference types.
VerificationReport run_type_checks(const ReferenceTypes& refs);

/// Full roster: structure, enumeration, theorems and appendix reconciliation.
VerificationReport run_all(const ReferenceTypes& refs = reference_types());

}  // namespace musico

#endif  // MUSICO_THEOREMS_H
