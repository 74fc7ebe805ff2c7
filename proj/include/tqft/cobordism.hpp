#pragma once

// Oriented and unoriented 2-dimensional cobordisms as words in the monoidal
// generators. A slice is the disjoint union of its generators, left to right;
// slices are glued in order from source to target.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tqft {

enum class Generator {
  Id,      // 1 → 1 cylinder
  Cup,     // 0 → 1 disk, the unit
  Cap,     // 1 → 0 disk, the counit
  Mult,    // 2 → 1 pair of pants
  Comult,  // 1 → 2 reversed pair of pants
  Swap,    // 2 → 2 braiding
  Phi,     // 1 → 1 orientation-reversing cylinder
  Theta,   // 0 → 1 Möbius band (punctured projective plane)
};

inline constexpr std::array<Generator, 8> kAllGenerators = {
    Generator::Id,     Generator::Cup,  Generator::Cap, Generator::Mult,
    Generator::Comult, Generator::Swap, Generator::Phi, Generator::Theta};

struct Arity {
  std::size_t in = 0;
  std::size_t out = 0;
};

Arity arity(Generator g);
/// Lowercase name used by the word file format, e.g. "comult".
std::string_view generator_name(Generator g);
std::optional<Generator> parse_generator(std::string_view name);
/// Phi and Theta exist only in the unoriented category.
bool requires_unoriented(Generator g);

enum class Orientation { Oriented, Unoriented };

using Slice = std::vector<Generator>;

/// Syntactic word; equality is slice-by-slice. A value need not be valid:
/// validate() is the gate every consumer goes through.
struct CobordismWord {
  Orientation orientation = Orientation::Oriented;
  std::vector<Slice> slices;

  friend bool operator==(const CobordismWord&, const CobordismWord&) = default;
};

struct Boundary {
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// Source and target circle counts. Throws ArityError naming the 1-based slice
/// when consecutive slices do not meet, when a slice is empty, or when an
/// oriented word contains Phi or Theta. A word with no slices is the identity
/// on zero circles.
Boundary validate(const CobordismWord& w);

/// One slice of n cylinders.
CobordismWord identity_word(std::size_t n, Orientation o = Orientation::Oriented);

/// w1 followed by w2 (w2 ∘ w1). Oriented only when both are. Throws
/// ArityError when target(w1) != source(w2).
CobordismWord compose_words(const CobordismWord& w1, const CobordismWord& w2);

/// Disjoint union, w1 on the left. The shorter word is padded with trailing
/// identity slices on its target boundary.
CobordismWord tensor_words(const CobordismWord& w1, const CobordismWord& w2);

/// Cup, then g handles (Comult, Mult), then Cap.
CobordismWord closed_oriented_surface(std::size_t genus);

/// Theta, then crosscaps-1 times (Theta Id, Mult), then g handles, then Cap.
/// Throws InputError for crosscaps == 0.
CobordismWord closed_unoriented_surface(std::size_t crosscaps, std::size_t genus);

/// Word file text: an orientation line, then one comma-separated slice per line.
std::string serialize(const CobordismWord& w);

/// Parses the word file format. Blank lines are skipped, '#' starts a comment,
/// whitespace around names is ignored. Throws ParseError naming the line.
/// Does not validate arities.
CobordismWord parse_word(std::string_view text);

}  // namespace tqft

namespace tqft {

/// One-line form for diagnostics, e.g. "[cup][comult][mult][cap]" or
/// "[theta,id][mult]".
std::string inline_form(const CobordismWord& w);

}  // namespace tqft
