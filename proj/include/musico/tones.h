#ifndef MUSICO_TONES_H
#define MUSICO_TONES_H

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace musico {

constexpr int kToneCount = 12;

constexpr int mod12(int x) { return ((x % kToneCount) + kToneCount) % kToneCount; }

/// Raised for unknown tone, scale, triad or type names.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// @brief Pitch class 0..11 with C = 0.
class Tone {
 public:
  constexpr Tone() = default;
  constexpr explicit Tone(int pc) : pc_(static_cast<std::uint8_t>(mod12(pc))) {}

  constexpr int pc() const { return pc_; }
  constexpr Tone operator+(int k) const { return Tone(pc_ + k); }
  constexpr Tone operator-(int k) const { return Tone(pc_ - k); }
  /// Semitones from this up to other, 0..11.
  constexpr int interval_to(Tone other) const { return mod12(other.pc_ - pc_); }

  std::string_view name() const;

  friend constexpr auto operator<=>(Tone, Tone) = default;

 private:
  std::uint8_t pc_ = 0;
};

/// Accepts C..B with any number of #, b, ♯, ♭ accidentals.
Tone parse_tone(std::string_view text);
Tone transpose(Tone t, int k);

/// @brief Subset of the 12 tones.
class ToneSet {
 public:
  constexpr ToneSet() = default;
  ToneSet(std::initializer_list<Tone> tones);
  template <typename It>
  ToneSet(It first, It last) {
    for (; first != last; ++first) insert(*first);
  }

  static ToneSet from_mask(std::uint16_t mask) {
    ToneSet s;
    s.bits_ = mask & 0xFFF;
    return s;
  }

  void insert(Tone t) { bits_ |= static_cast<std::uint16_t>(1u << t.pc()); }
  bool contains(Tone t) const { return bits_ & (1u << t.pc()); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint16_t mask() const { return bits_; }

  ToneSet transposed(int k) const;
  ToneSet operator|(ToneSet o) const { return from_mask(bits_ | o.bits_); }
  ToneSet operator&(ToneSet o) const { return from_mask(bits_ & o.bits_); }

  /// Ascending from C.
  std::vector<Tone> tones() const;
  std::string to_string() const;

  friend constexpr auto operator<=>(ToneSet, ToneSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

struct ScaleTemplate {
  std::string name;
  std::vector<int> offsets;
  bool cyclic = false;
};

struct TriadTemplate {
  std::string name;
  std::array<int, 3> offsets{};
};

/// @brief A template placed on a root.
class ScaleInstance {
 public:
  ScaleInstance(Tone root, ScaleTemplate tmpl);

  Tone root() const { return root_; }
  const ScaleTemplate& scale_template() const { return tmpl_; }
  const std::vector<Tone>& tones() const { return tones_; }
  bool cyclic() const { return tmpl_.cyclic; }
  ToneSet tone_set() const { return ToneSet(tones_.begin(), tones_.end()); }

  ScaleInstance transposed(int k) const { return ScaleInstance(root_ + k, tmpl_); }
  bool operator==(const ScaleInstance& o) const { return root_ == o.root_ && tmpl_.name == o.tmpl_.name; }

 private:
  Tone root_;
  ScaleTemplate tmpl_;
  std::vector<Tone> tones_;
};

ScaleInstance transpose(const ScaleInstance& s, int k);

using TriadTones = std::array<Tone, 3>;

TriadTones triad_at(const TriadTemplate& t, Tone root);

/// @brief Appendix scale and triad templates, built once.
class Catalog {
 public:
  Catalog();

  const std::vector<ScaleTemplate>& scales() const { return scales_; }
  const std::vector<TriadTemplate>& triads() const { return triads_; }
  const ScaleTemplate& scale(std::string_view name) const;
  const TriadTemplate& triad(std::string_view name) const;
  bool has_scale(std::string_view name) const;

 private:
  std::vector<ScaleTemplate> scales_;
  std::vector<TriadTemplate> triads_;
};

const Catalog& catalog();

/// Convenience: catalog().scale(name) placed on root.
ScaleInstance scale(std::string_view name, Tone root);

/// Tones of the set listed upward from root.
std::vector<Tone> ascending_normal_form(ToneSet tones, Tone root);

std::string join_names(const std::vector<Tone>& tones, std::string_view sep = " ");

}  // namespace musico

#endif  // MUSICO_TONES_H
