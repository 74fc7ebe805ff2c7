#include <vector>

#include "tqft/evaluate.hpp"

namespace tqft {

CobordismWord random_word(std::mt19937_64& rng, Orientation o, const RandomWordLimits& limits) {
  auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

  std::vector<Generator> consuming = {Generator::Id,     Generator::Cap, Generator::Mult,
                                      Generator::Comult, Generator::Swap};
  std::vector<Generator> creating = {Generator::Cup};
  if (o == Orientation::Unoriented) {
    consuming.push_back(Generator::Phi);
    creating.push_back(Generator::Theta);
  }

  CobordismWord w{o, {}};
  std::size_t strands = pick(limits.max_strands + 1);
  const std::size_t depth = 1 + pick(limits.max_slices);
  for (std::size_t s = 0; s < depth; ++s) {
    Slice slice;
    std::size_t out = 0;
    bool accepted = false;
    for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
      slice.clear();
      out = 0;
      std::size_t pos = 0;
      while (pos < strands) {
        if (pick(4) == 0) {
          slice.push_back(creating[pick(creating.size())]);
          ++out;
          continue;
        }
        const Generator g = consuming[pick(consuming.size())];
        if (arity(g).in > strands - pos) continue;
        slice.push_back(g);
        pos += arity(g).in;
        out += arity(g).out;
      }
      if (slice.empty() || pick(4) == 0) {
        slice.push_back(creating[pick(creating.size())]);
        ++out;
      }
      accepted = out <= limits.max_strands;
    }
    if (!accepted) {
      slice = strands > 0 ? Slice(strands, Generator::Id) : Slice{Generator::Cup};
      out = strands > 0 ? strands : 1;
    }
    w.slices.push_back(std::move(slice));
    strands = out;
  }
  return w;
}

}  // namespace tqft
