#include "tqft/cobordism.hpp"

#include <algorithm>
#include <sstream>

#include "tqft/errors.hpp"

namespace tqft {

Arity arity(Generator g) {
  switch (g) {
    case Generator::Id: return {1, 1};
    case Generator::Cup: return {0, 1};
    case Generator::Cap: return {1, 0};
    case Generator::Mult: return {2, 1};
    case Generator::Comult: return {1, 2};
    case Generator::Swap: return {2, 2};
    case Generator::Phi: return {1, 1};
    case Generator::Theta: return {0, 1};
  }
  return {};
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Id: return "id";
    case Generator::Cup: return "cup";
    case Generator::Cap: return "cap";
    case Generator::Mult: return "mult";
    case Generator::Comult: return "comult";
    case Generator::Swap: return "swap";
    case Generator::Phi: return "phi";
    case Generator::Theta: return "theta";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) {
  for (Generator g : kAllGenerators) {
    if (generator_name(g) == name) return g;
  }
  return std::nullopt;
}

bool requires_unoriented(Generator g) { return g == Generator::Phi || g == Generator::Theta; }

namespace {

Arity slice_arity(const Slice& s) {
  Arity total;
  for (Generator g : s) {
    total.in += arity(g).in;
    total.out += arity(g).out;
  }
  return total;
}

Orientation join(Orientation a, Orientation b) {
  return a == Orientation::Oriented && b == Orientation::Oriented ? Orientation::Oriented
                                                                  : Orientation::Unoriented;
}

}  // namespace

Boundary validate(const CobordismWord& w) {
  if (w.slices.empty()) return {0, 0};
  Boundary b{slice_arity(w.slices.front()).in, 0};
  std::size_t current = b.source;
  for (std::size_t i = 0; i < w.slices.size(); ++i) {
    const Slice& s = w.slices[i];
    const std::string where = "slice " + std::to_string(i + 1);
    if (s.empty()) throw ArityError(i + 1, where + " is empty");
    if (w.orientation == Orientation::Oriented) {
      for (Generator g : s) {
        if (requires_unoriented(g)) {
          throw ArityError(i + 1, where + ": generator " + std::string(generator_name(g)) +
                                      " is not allowed in an oriented word");
        }
      }
    }
    const Arity a = slice_arity(s);
    if (a.in != current) {
      throw ArityError(i + 1, where + " expects " + std::to_string(a.in) +
                                  " input circle(s) but receives " + std::to_string(current));
    }
    current = a.out;
  }
  b.target = current;
  return b;
}

CobordismWord identity_word(std::size_t n, Orientation o) {
  return CobordismWord{o, {Slice(n, Generator::Id)}};
}

CobordismWord compose_words(const CobordismWord& w1, const CobordismWord& w2) {
  const Boundary b1 = validate(w1);
  const Boundary b2 = validate(w2);
  if (b1.target != b2.source) {
    throw ArityError(0, "cannot compose: first word ends on " + std::to_string(b1.target) +
                            " circle(s), second starts on " + std::to_string(b2.source));
  }
  CobordismWord out{join(w1.orientation, w2.orientation), w1.slices};
  out.slices.insert(out.slices.end(), w2.slices.begin(), w2.slices.end());
  return out;
}

CobordismWord tensor_words(const CobordismWord& w1, const CobordismWord& w2) {
  const Boundary b1 = validate(w1);
  const Boundary b2 = validate(w2);
  const std::size_t depth = std::max(w1.slices.size(), w2.slices.size());
  CobordismWord out{join(w1.orientation, w2.orientation), {}};
  out.slices.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    Slice s = i < w1.slices.size() ? w1.slices[i] : Slice(b1.target, Generator::Id);
    const Slice right = i < w2.slices.size() ? w2.slices[i] : Slice(b2.target, Generator::Id);
    s.insert(s.end(), right.begin(), right.end());
    out.slices.push_back(std::move(s));
  }
  return out;
}

CobordismWord closed_oriented_surface(std::size_t genus) {
  CobordismWord w{Orientation::Oriented, {{Generator::Cup}}};
  for (std::size_t i = 0; i < genus; ++i) {
    w.slices.push_back({Generator::Comult});
    w.slices.push_back({Generator::Mult});
  }
  w.slices.push_back({Generator::Cap});
  return w;
}

CobordismWord closed_unoriented_surface(std::size_t crosscaps, std::size_t genus) {
  if (crosscaps == 0) {
    throw InputError("a closed unoriented surface needs at least one cross-cap; "
                     "use closed_oriented_surface for orientable surfaces");
  }
  CobordismWord w{Orientation::Unoriented, {{Generator::Theta}}};
  for (std::size_t i = 1; i < crosscaps; ++i) {
    w.slices.push_back({Generator::Theta, Generator::Id});
    w.slices.push_back({Generator::Mult});
  }
  for (std::size_t i = 0; i < genus; ++i) {
    w.slices.push_back({Generator::Comult});
    w.slices.push_back({Generator::Mult});
  }
  w.slices.push_back({Generator::Cap});
  return w;
}

std::string serialize(const CobordismWord& w) {
  std::ostringstream os;
  os << (w.orientation == Orientation::Oriented ? "oriented" : "unoriented") << '\n';
  for (const Slice& s : w.slices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ", ";
      os << generator_name(s[i]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

CobordismWord parse_word(std::string_view text) {
  CobordismWord w;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no);
    if (!have_header) {
      if (line == "oriented") {
        w.orientation = Orientation::Oriented;
      } else if (line == "unoriented") {
        w.orientation = Orientation::Unoriented;
      } else {
        throw ParseError(where, where + ": expected \"oriented\" or \"unoriented\", got \"" +
                                    std::string(line) + "\"");
      }
      have_header = true;
      continue;
    }

    Slice s;
    while (true) {
      const auto comma = line.find(',');
      const std::string_view name = trim(line.substr(0, comma));
      const auto g = parse_generator(name);
      if (!g) {
        throw ParseError(where, where + ": unknown generator \"" + std::string(name) + "\"");
      }
      s.push_back(*g);
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    w.slices.push_back(std::move(s));
  }
  if (!have_header) throw ParseError("line 1", "word file is missing its orientation line");
  return w;
}

}  // namespace tqft

namespace tqft {

std::string inline_form(const CobordismWord& w) {
  std::string out;
  for (const Slice& s : w.slices) {
    out += '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += generator_name(s[i]);
    }
    out += ']';
  }
  return out.empty() ? "[]" : out;
}

}  // namespace tqft
