#include "tqft/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tqft/documents.hpp"
#include "tqft/evaluate.hpp"

namespace tqft::cli {

namespace {

// A command-level failure carrying its exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraDocument load_algebra(const std::string& path) {
  try {
    return parse_algebra_document(read_file(path));
  } catch (const ParseError& e) {
    throw Exit{kBadInput, path + ": " + e.what()};
  } catch (const DegenerateFormError& e) {
    throw Exit{kCheckFailed, path + ": " + e.what()};
  }
}

const ExtendedFrobeniusAlgebra& require_extended(const AlgebraDocument& doc) {
  if (!doc.extended) {
    throw Exit{kBadInput, "extended structure required: " + doc.algebra.name() +
                              " has no \"extended\" block"};
  }
  return *doc.extended;
}

// Fails with kCheckFailed, listing the failing checks, unless `r` passes.
void require_passing(const AxiomReport& r, const std::string& what) {
  if (r.passed()) return;
  std::string names;
  for (const auto& n : r.failed_names()) names += (names.empty() ? "" : ", ") + n;
  throw Exit{kCheckFailed, what + " fails its axiom check (" + names + ")"};
}

void require_valid(const AlgebraDocument& doc, bool extended) {
  require_passing(check_frobenius(doc.algebra), doc.algebra.name());
  if (extended) require_passing(check_extended(require_extended(doc)), doc.algebra.name());
}

int cmd_check(const std::string& path, bool extended, std::ostream& out) {
  const AlgebraDocument doc = load_algebra(path);
  AxiomReport r = check_frobenius(doc.algebra);
  if (extended) r.append(check_extended(require_extended(doc)));
  out << r.format();
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_invariant(const std::string& path, std::size_t genus, std::size_t crosscaps,
                  std::ostream& out) {
  const AlgebraDocument doc = load_algebra(path);
  if (crosscaps > 0) require_extended(doc);
  require_valid(doc, crosscaps > 0);
  const Rational value = crosscaps > 0
                             ? invariant(closed_unoriented_surface(crosscaps, genus), *doc.extended)
                             : invariant(closed_oriented_surface(genus), doc.algebra);
  out << value << '\n';
  return kOk;
}

CobordismWord load_word(const std::string& path) {
  try {
    return parse_word(read_file(path));
  } catch (const ParseError& e) {
    throw Exit{kBadInput, path + ": " + e.what()};
  }
}

int cmd_eval(const std::string& word_path, const std::string& algebra_path, std::ostream& out) {
  const CobordismWord w = load_word(word_path);
  const AlgebraDocument doc = load_algebra(algebra_path);
  const Matrix m = doc.extended ? evaluate(w, *doc.extended) : evaluate(w, doc.algebra);
  out << m;
  return kOk;
}

int cmd_tensor(const std::string& a_path, const std::string& b_path, const std::string& out_path,
               bool extended, std::ostream& out) {
  const AlgebraDocument a = load_algebra(a_path);
  const AlgebraDocument b = load_algebra(b_path);
  if (extended) {
    require_extended(a);
    require_extended(b);
  }
  require_valid(a, extended);
  require_valid(b, extended);

  std::string text;
  std::size_t dim = 0;
  std::string name;
  if (extended) {
    const ExtendedFrobeniusAlgebra t = tensor_extended(*a.extended, *b.extended);
    text = write_algebra_document(t.base(), &t);
    dim = t.dim();
    name = t.name();
  } else {
    const FrobeniusAlgebra t = tensor(a.algebra, b.algebra);
    text = write_algebra_document(t);
    dim = t.dim();
    name = t.name();
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) throw Exit{kBadInput, "cannot write " + out_path};
  out << "wrote " << name << " (dim " << dim << ") to " << out_path << '\n';
  return kOk;
}

template <class Algebra>
int report_naturality(const Morphism<Algebra>& f, const std::optional<CobordismWord>& word,
                      bool extended, std::ostream& out) {
  if (word) {
    const AxiomReport r = check_naturality(f, *word);
    out << r.format();
    return r.passed() ? kOk : kCheckFailed;
  }
  bool all = true;
  for (Generator g : kAllGenerators) {
    if (requires_unoriented(g) && !extended) continue;
    const CobordismWord single{extended ? Orientation::Unoriented : Orientation::Oriented, {{g}}};
    CheckResult c = check_naturality(f, single).checks().front();
    c.name = generator_name(g);
    AxiomReport line;
    line.add(std::move(c));
    out << line.format();
    all = all && line.passed();
  }
  return all ? kOk : kCheckFailed;
}

int cmd_naturality(const std::string& morphism_path, const std::string& a_path,
                   const std::string& b_path, const std::string& word_path, std::ostream& out) {
  MorphismDocument m;
  try {
    m = parse_morphism_document(read_file(morphism_path));
  } catch (const ParseError& e) {
    throw Exit{kBadInput, morphism_path + ": " + e.what()};
  }
  const AlgebraDocument a = load_algebra(a_path);
  const AlgebraDocument b = load_algebra(b_path);
  if (m.source != a.algebra.name() || m.target != b.algebra.name()) {
    throw Exit{kBadInput, "morphism " + m.source + " -> " + m.target + " does not match algebras " +
                              a.algebra.name() + " and " + b.algebra.name()};
  }
  std::optional<CobordismWord> word;
  if (!word_path.empty()) word = load_word(word_path);

  if (a.extended && b.extended) {
    return report_naturality(ExtendedFrobeniusMorphism(*a.extended, *b.extended, m.map), word,
                             true, out);
  }
  return report_naturality(FrobeniusMorphism(a.algebra, b.algebra, m.map), word, false, out);
}

int cmd_search_theta(const std::string& path, const std::string& phi_path, unsigned bound,
                     std::ostream& out) {
  const AlgebraDocument doc = load_algebra(path);
  require_valid(doc, false);
  Matrix phi = Matrix::identity(doc.algebra.dim());
  if (!phi_path.empty()) {
    try {
      phi = parse_phi_document(read_file(phi_path));
    } catch (const ParseError& e) {
      throw Exit{kBadInput, phi_path + ": " + e.what()};
    }
  }
  require_passing(check_involution(doc.algebra, phi), "phi on " + doc.algebra.name());
  const std::vector<Matrix> found = search_theta(doc.algebra, phi, bound);
  for (const Matrix& theta : found) {
    out << '[';
    for (std::size_t i = 0; i < theta.rows(); ++i) out << (i ? ", " : "") << theta(i, 0);
    out << "]\n";
  }
  out << "solutions: " << found.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact 2-dimensional TQFTs from commutative Frobenius algebras", "tqft"};
  app.require_subcommand(1);

  bool extended = false;
  std::string file, file_b, word_file, out_file, phi_file;
  std::size_t genus = 0;
  std::size_t crosscaps = 0;
  unsigned bound = 1;

  auto* check = app.add_subcommand("check", "Verify the Frobenius (and extended) axioms");
  check->add_flag("--extended", extended, "Also check the phi/theta diagrams");
  check->add_option("FILE", file, "Algebra document")->required();

  auto* inv = app.add_subcommand("invariant", "Invariant of a closed surface");
  inv->add_option("--genus", genus, "Number of handles");
  inv->add_option("--crosscaps", crosscaps, "Number of cross-caps (needs extended structure)");
  inv->add_option("FILE", file, "Algebra document")->required();

  std::string word_arg;
  auto* eval = app.add_subcommand("eval", "Evaluate a cobordism word");
  eval->add_option("WORD_FILE", word_arg, "Word file")->required();
  eval->add_option("ALGEBRA_FILE", file, "Algebra document")->required();

  auto* tens = app.add_subcommand("tensor", "Write the tensor product of two algebras");
  tens->add_flag("--extended", extended, "Tensor the extended structures too");
  tens->add_option("A_FILE", file, "First algebra")->required();
  tens->add_option("B_FILE", file_b, "Second algebra")->required();
  tens->add_option("-o,--output", out_file, "Output document")->required();

  std::string morphism_file, nat_a, nat_b;
  auto* nat = app.add_subcommand("naturality", "Naturality of a morphism against generators or a word");
  nat->add_option("--word", word_file, "Check this word instead of every generator");
  nat->add_option("MORPHISM_FILE", morphism_file, "Morphism document")->required();
  nat->add_option("A_FILE", nat_a, "Source algebra")->required();
  nat->add_option("B_FILE", nat_b, "Target algebra")->required();

  auto* search = app.add_subcommand("search-theta", "Integer points theta completing an extended structure");
  search->add_option("--phi", phi_file, "Involution document (default: identity)");
  search->add_option("--bound", bound, "Search [-N, N] in each coordinate")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("ALGEBRA_FILE", file, "Algebra document")->required();

  std::vector<std::string> argv_store{"tqft"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*check) return cmd_check(file, extended, out);
    if (*inv) return cmd_invariant(file, genus, crosscaps, out);
    if (*eval) return cmd_eval(word_arg, file, out);
    if (*tens) return cmd_tensor(file, file_b, out_file, extended, out);
    if (*nat) return cmd_naturality(morphism_file, nat_a, nat_b, word_file, out);
    if (*search) return cmd_search_theta(file, phi_file, bound, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const DegenerateFormError& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace tqft::cli
