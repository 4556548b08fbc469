#include "musico/tones.h"

#include <algorithm>
#include <bit>

namespace musico {

namespace {

constexpr std::array<std::string_view, kToneCount> kToneNames = {
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};

constexpr std::string_view kSharpUtf8 = "♯";
constexpr std::string_view kFlatUtf8 = "♭";

}  // namespace

std::string_view Tone::name() const { return kToneNames[pc_]; }

Tone parse_tone(std::string_view text) {
  if (text.empty()) throw ParseError("empty tone name");
  static constexpr int kLetterPc[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G
  char letter = text[0];
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  if (letter < 'A' || letter > 'G') throw ParseError("unknown tone: " + std::string(text));
  int pc = kLetterPc[letter - 'A'];
  std::string_view rest = text.substr(1);
  while (!rest.empty()) {
    if (rest[0] == '#' || rest[0] == 's') {
      ++pc;
      rest.remove_prefix(1);
    } else if (rest[0] == 'b') {
      --pc;
      rest.remove_prefix(1);
    } else if (rest.starts_with(kSharpUtf8)) {
      ++pc;
      rest.remove_prefix(kSharpUtf8.size());
    } else if (rest.starts_with(kFlatUtf8)) {
      --pc;
      rest.remove_prefix(kFlatUtf8.size());
    } else {
      throw ParseError("unknown tone: " + std::string(text));
    }
  }
  return Tone(pc);
}

Tone transpose(Tone t, int k) { return t + k; }

ToneSet::ToneSet(std::initializer_list<Tone> tones) {
  for (Tone t : tones) insert(t);
}

int ToneSet::size() const { return std::popcount(bits_); }

ToneSet ToneSet::transposed(int k) const {
  ToneSet out;
  for (int pc = 0; pc < kToneCount; ++pc)
    if (bits_ & (1u << pc)) out.insert(Tone(pc + k));
  return out;
}

std::vector<Tone> ToneSet::tones() const {
  std::vector<Tone> out;
  for (int pc = 0; pc < kToneCount; ++pc)
    if (bits_ & (1u << pc)) out.emplace_back(pc);
  return out;
}

std::string ToneSet::to_string() const { return "{" + join_names(tones(), ",") + "}"; }

ScaleInstance::ScaleInstance(Tone root, ScaleTemplate tmpl) : root_(root), tmpl_(std::move(tmpl)) {
  tones_.reserve(tmpl_.offsets.size());
  for (int off : tmpl_.offsets) tones_.push_back(root_ + off);
}

ScaleInstance transpose(const ScaleInstance& s, int k) { return s.transposed(k); }

TriadTones triad_at(const TriadTemplate& t, Tone root) {
  return {root + t.offsets[0], root + t.offsets[1], root + t.offsets[2]};
}

Catalog::Catalog() {
  scales_ = {
      {"major", {0, 2, 4, 5, 7, 9, 11}, false},
      {"minor", {0, 2, 3, 5, 7, 8, 10}, false},
      {"hexatonic-major", {0, 2, 4, 5, 7, 9}, false},
      {"hexatonic-minor", {0, 2, 3, 5, 7, 10}, false},
      {"pentatonic-major", {0, 2, 4, 7, 9}, false},
      {"pentatonic-minor", {0, 3, 5, 7, 10}, false},
      {"dorian", {0, 2, 3, 5, 7, 9, 10}, false},
      {"phrygian", {0, 1, 3, 5, 7, 8, 10}, false},
      {"lydian", {0, 2, 4, 6, 7, 9, 11}, false},
      {"mixolydian", {0, 2, 4, 5, 7, 9, 10}, false},
      {"chromatic", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, true},
      {"whole-tone", {0, 2, 4, 6, 8, 10}, true},
      {"pythagorean-chain", {0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5}, true},
      {"messiaen-minor-thirds", {0, 3, 6, 9}, false},
      {"messiaen-semitone-tritone", {0, 1, 6, 7}, false},
      {"messiaen-whole-tone-tritone", {0, 2, 6, 8}, false},
  };
  triads_ = {
      {"major", {0, 4, 7}},
      {"minor", {0, 3, 7}},
      {"hexatonic-minor-fundamental", {0, 7, 10}},
      {"hexatonic-major-fundamental", {0, 7, 9}},
  };
}

const ScaleTemplate& Catalog::scale(std::string_view name) const {
  for (const auto& s : scales_)
    if (s.name == name) return s;
  throw ParseError("unknown scale: " + std::string(name));
}

const TriadTemplate& Catalog::triad(std::string_view name) const {
  for (const auto& t : triads_)
    if (t.name == name) return t;
  throw ParseError("unknown triad: " + std::string(name));
}

bool Catalog::has_scale(std::string_view name) const {
  return std::any_of(scales_.begin(), scales_.end(), [&](const ScaleTemplate& s) { return s.name == name; });
}

const Catalog& catalog() {
  static const Catalog cat;
  return cat;
}

ScaleInstance scale(std::string_view name, Tone root) { return ScaleInstance(root, catalog().scale(name)); }

std::vector<Tone> ascending_normal_form(ToneSet tones, Tone root) {
  if (!tones.contains(root)) throw std::invalid_argument("root is not in the tone set");
  std::vector<Tone> out;
  for (int k = 0; k < kToneCount; ++k)
    if (tones.contains(root + k)) out.push_back(root + k);
  return out;
}

std::string join_names(const std::vector<Tone>& tones, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tones.size(); ++i) {
    if (i) out += sep;
    out += tones[i].name();
  }
  return out;
}

}  // namespace musico
