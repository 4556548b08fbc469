#include "musico/generalize.h"

#include <sstream>

namespace musico {

namespace {

struct RawEntry {
  const char* name;
  const char* tones;
  const char* triads[3];
};

std::vector<Tone> parse_tones(const char* text) {
  std::vector<Tone> out;
  std::istringstream in(text);
  for (std::string w; in >> w;) out.push_back(parse_tone(w));
  return out;
}

template <std::size_t N>
AppendixTable make_table(AppendixListing l, const char* title, TriadPattern base, Generation gen,
                         const RawEntry (&raw)[N]) {
  AppendixTable t{l, title, base, gen, {}};
  for (const RawEntry& e : raw) {
    AppendixEntry entry{e.name, parse_tones(e.tones), {}};
    for (const char* tri : e.triads) entry.triads.push_back(parse_tones(tri));
    t.entries.push_back(std::move(entry));
  }
  return t;
}

// First generalization of major scales
constexpr RawEntry kMajorFirst[] = {
    {"C-major", "C D E F G A B", {"C E G", "F A C", "G B D"}},
    {"C_1-major", "C Eb E F G G# Bb", {"C G G#", "E F C", "G# Bb Eb"}},
    {"C_2-major", "C C# E G G# A B", {"C G# A", "G E C", "A C# B"}},
    {"C_3-major", "C D F G G# A Bb", {"C A F", "G# G C", "F D Bb"}},
    {"C_4-major", "C C# Eb E F G# A", {"C F E", "G# A C", "E Eb C#"}},
    {"MC-major", "C Eb F G G# A Bb", {"C G# G", "A F C", "G Eb Bb"}},
    {"MC_1-major", "C C# E F G# A B", {"C A G#", "E F C", "G# B C#"}},
    {"MC_2-major", "C D E F G A Bb", {"C F A", "E G C", "A Bb D"}},
    {"MC_3-major", "C C# Eb E F G G#", {"C E F", "G G# C", "F C# Eb"}},
    {"MC_4-major", "C D E G G# A B", {"C G E", "G# A C", "E D B"}},
};

// First generalization of minor scales
constexpr RawEntry kMinorFirst[] = {
    {"C-minor", "C D Eb F G G# Bb", {"C Eb G", "F G# C", "G Bb D"}},
    {"C_1-minor", "C E F G G# A B", {"C G G#", "E F C", "G# A B"}},
    {"C_2-minor", "C C# Eb E F G# Bb", {"C G# F", "Eb E C", "F C# Bb"}},
    {"C_3-minor", "C D Eb E F G A", {"C F E", "G Eb C", "E D A"}},
    {"C_4-minor", "C C# Eb E G G# B", {"C E Eb", "G# G C", "Eb B C#"}},
    {"MC-minor", "C D Eb E F G Bb", {"C G Eb", "F E C", "Eb D Bb"}},
    {"MC_1-minor", "C Eb E G G# A B", {"C G# G", "E Eb C", "G B A"}},
    {"MC_2-minor", "C C# Eb F G G# Bb", {"C F G#", "Eb G C", "G# Bb C#"}},
    {"MC_3-minor", "C D E F G G# A", {"C E F", "G G# C", "F A D"}},
    {"MC_4-minor", "C C# Eb E F G# B", {"C Eb E", "G# F C", "E C# B"}},
};

// Second generalization of major scales
constexpr RawEntry kMajorSecond[] = {
    {"C-major", "C D E F G A B", {"C E G", "F A C", "G B D"}},
    {"C_1'-major", "C C# Eb F G# A Bb", {"C C# F", "Eb G# C", "F A Bb"}},
    {"C_2'-major", "C D Eb E G G# B", {"C B Eb", "D E C", "Eb G# G"}},
    {"C_3'-major", "C C# D E F A Bb", {"C A D", "Bb C# C", "D E F"}},
    {"C_4'-major", "C C# Eb G G# Bb B", {"C G# Bb", "G B C", "Bb C# Eb"}},
    {"MC'-major", "C C# Eb F G# Bb B", {"C G# Eb", "F C# C", "Eb B Bb"}},
    {"MC_1'-major", "C D Eb E G A B", {"C E D", "Eb B C", "D A G"}},
    {"MC_2'-major", "C C# D F G# A Bb", {"C G# Bb", "D A C", "Bb G# F"}},
    {"MC_3'-major", "C Eb E G G# Bb B", {"C B G", "Bb G# C", "G E Eb"}},
    {"MC_4'-major", "C C# D E F G A", {"C A F", "G E C", "F C# D"}},
};

// Second generalization of minor scales
constexpr RawEntry kMinorSecond[] = {
    {"C-minor", "C D Eb F G Ab Bb", {"C Eb G", "F Ab C", "G Bb D"}},
    {"C_1'-minor", "C D E F G A B", {"C E A", "G B C", "A D F"}},
    {"C_2'-minor", "C C# F G G# A Bb", {"C G# Bb", "A C# C", "Bb F G"}},
    {"C_3'-minor", "C D Eb G A Bb B", {"C B D", "Bb Eb C", "D G A"}},
    {"C_4'-minor", "C C# D E F A Bb", {"C C# F", "D E C", "F A Bb"}},
    {"MC'-minor", "C D E G A Bb B", {"C B G", "A E C", "G D Bb"}},
    {"MC_1'-minor", "C C# D F G# A Bb", {"C C# A", "Bb G# C", "A F D"}},
    {"MC_2'-minor", "C D Eb F G Bb B", {"C Eb Bb", "D B C", "Bb G F"}},
    {"MC_3'-minor", "C C# D E F G A", {"C E D", "F C# C", "D A G"}},
    {"MC_4'-minor", "C Eb F G G# A Bb", {"C G# F", "G Eb C", "F Bb A"}},
};

}  // namespace

const AppendixTable& appendix_table(AppendixListing l) {
  static const AppendixTable major_first =
      make_table(AppendixListing::MajorFirst, "First generalization of major scales", TriadPattern::Major, Generation::First, kMajorFirst);
  static const AppendixTable minor_first =
      make_table(AppendixListing::MinorFirst, "First generalization of minor scales", TriadPattern::Minor, Generation::First, kMinorFirst);
  static const AppendixTable major_second = make_table(AppendixListing::MajorSecond, "Second generalization of major scales",
                                              TriadPattern::Major, Generation::Second, kMajorSecond);
  static const AppendixTable minor_second = make_table(AppendixListing::MinorSecond, "Second generalization of minor scales",
                                              TriadPattern::Minor, Generation::Second, kMinorSecond);
  switch (l) {
    case AppendixListing::MajorFirst: return major_first;
    case AppendixListing::MinorFirst: return minor_first;
    case AppendixListing::MajorSecond: return major_second;
    case AppendixListing::MinorSecond: return minor_second;
    case AppendixListing::TriadLists: break;
  }
  throw std::invalid_argument("listing has no scale table");
}

const std::vector<AppendixException>& appendix_exceptions() {
  static const std::vector<AppendixException> known = {
      {AppendixListing::MajorSecond, "MC_2'-major", "C G# Bb", "C C# Bb"},
  };
  return known;
}

const TriadListData& triad_list_data() {
  static const TriadListData data = {
      {"C E G", "C G G#", "C G# A", "C F A", "C E F"},
      {"C E G", "C G G#", "C G# A", "C F A", "C E F", "C D Eb", "C Eb F", "C F G", "C G Bb", "C D Bb"},
      {"C Eb G", "C G G#", "C F G#", "C E F", "C Eb E"},
      {"C Eb G", "C G G#", "C F G#", "C E F", "C Eb E", "C D F", "C F G", "C G A", "C A Bb", "C D Bb"},
      {"C G G#", "C E F"},
      {"C F G", "C D Bb"},
  };
  return data;
}

}  // namespace musico
