#ifndef MUSICO_GENERALIZE_H
#define MUSICO_GENERALIZE_H

#include <set>
#include <string>
#include <vector>

#include "musico/check.h"
#include "musico/search.h"

namespace musico {

enum class TriadPattern : std::uint8_t { Major, Minor };
enum class Generation : std::uint8_t { First, Second };

std::string to_string(TriadPattern p);
std::string to_string(Generation g);

/// @brief Golden triangles (gnomons for the Pythagorean family) read as triads.
struct GeneralizedTriadSet {
  Family family = Family::Chromatic;
  TriadPattern pattern = TriadPattern::Major;
  Generation generation = Generation::First;
  std::vector<TypeLabel> source_types;
  TriangleShape kind = TriangleShape::GoldenTriangle;
  std::set<ToneSet> patterns;  // apex transposed to C
  std::set<ToneSet> triads;    // as found on the source types
  std::set<std::pair<int, ToneSet>> rooted;  // (apex pitch class, triad)
};

/// Source type pair: major {1,4} / {2',3'}, minor {2,3} / {1',4'}.
std::vector<TypeLabel> triad_source_types(Family family, TriadPattern pattern);

GeneralizedTriadSet golden_triads(Family family, TriadPattern pattern, Generation generation,
                                  const ReferenceTypes& refs = reference_types());

/// Pattern written from C upward, e.g. "CGG#".
std::string pattern_name(ToneSet pattern);

struct GeneralizedScale {
  std::string name;  // appendix name once reconciled
  ToneSet tones;
  std::vector<Tone> ascending;
  std::vector<ToneSet> triads;  // images of tonic, subdominant, dominant
  VertexPerm op;
};

struct GeneralizedScaleFamily {
  Family family = Family::Chromatic;
  TriadPattern base = TriadPattern::Major;
  Generation generation = Generation::First;
  TypeLabel source;
  std::vector<GeneralizedScale> entries;  // sorted by tone set
};

/// First generation: the pair member where the C-rooted base triad has apex C.
TypeLabel scale_source_type(Family family, TriadPattern base, Generation generation,
                            const ReferenceTypes& refs = reference_types());

GeneralizedScaleFamily stabilizer_orbit_scales(TriadPattern base, Generation generation,
                                               Family family = Family::Chromatic,
                                               const ReferenceTypes& refs = reference_types());

/// Orbit of any scale's figure under the stabilizer of its root's vertex.
std::vector<GeneralizedScale> stabilizer_orbit(const Assignment& a, const ScaleInstance& s,
                                               const std::vector<TriadTones>& triads = {});

enum class AppendixListing : std::uint8_t { MajorFirst, MinorFirst, MajorSecond, MinorSecond, TriadLists };

std::vector<AppendixListing> all_appendix_listings();
std::string to_string(AppendixListing l);

struct AppendixEntry {
  std::string name;
  std::vector<Tone> tones;
  std::vector<std::vector<Tone>> triads;
};

struct AppendixTable {
  AppendixListing listing = AppendixListing::MajorFirst;
  std::string title;
  TriadPattern base = TriadPattern::Major;
  Generation generation = Generation::First;
  std::vector<AppendixEntry> entries;
};

/// Known transcription slip: appendix triad versus the generated one.
struct AppendixException {
  AppendixListing listing;
  std::string entry;
  std::string listed;
  std::string generated;
};

const AppendixTable& appendix_table(AppendixListing l);
const std::vector<AppendixException>& appendix_exceptions();

struct TriadListData {
  std::vector<std::string> major_first, major_second, minor_first, minor_second;
  std::vector<std::string> first_common, second_common;
};

const TriadListData& triad_list_data();

/// Compares a generated family against a table (entry by entry).
CheckResult reconcile(const AppendixTable& table, const GeneralizedScaleFamily& family,
                      const std::vector<AppendixException>& exceptions = appendix_exceptions());

CheckResult reconcile_appendix(AppendixListing l, const ReferenceTypes& refs = reference_types());

CheckResult check_generalized_triads(const ReferenceTypes& refs = reference_types());

}  // namespace musico

#endif  // MUSICO_GENERALIZE_H
