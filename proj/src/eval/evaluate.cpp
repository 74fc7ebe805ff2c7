#include "tqft/evaluate.hpp"

#include <utility>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

// Generator → structure matrix for one algebra.
class GeneratorTable {
 public:
  GeneratorTable(const FrobeniusAlgebra& a, const ExtendedFrobeniusAlgebra* ext)
      : base_(a), ext_(ext), id_(Matrix::identity(a.dim())), swap_(braiding(a.dim(), a.dim())) {}

  std::size_t dim() const { return base_.dim(); }

  const Matrix& matrix(Generator g) const {
    switch (g) {
      case Generator::Id: return id_;
      case Generator::Cup: return base_.unit();
      case Generator::Cap: return base_.counit();
      case Generator::Mult: return base_.mult();
      case Generator::Comult: return base_.comult();
      case Generator::Swap: return swap_;
      case Generator::Phi: return ext_->involution();
      case Generator::Theta: return ext_->point();
    }
    return id_;
  }

  // Validates the word and rejects unoriented generators without an extension.
  Boundary admit(const CobordismWord& w) const {
    const Boundary b = validate(w);
    if (ext_ != nullptr) return b;
    for (std::size_t i = 0; i < w.slices.size(); ++i) {
      for (Generator g : w.slices[i]) {
        if (requires_unoriented(g)) {
          throw CapabilityError("slice " + std::to_string(i + 1) + ": generator " +
                                std::string(generator_name(g)) + " needs an extended algebra, " +
                                base_.name() + " has no phi/theta");
        }
      }
    }
    return b;
  }

 private:
  const FrobeniusAlgebra& base_;
  const ExtendedFrobeniusAlgebra* ext_;
  Matrix id_;
  Matrix swap_;
};

// Contracts `g` (n^out × n^in) into `state` on the strands following the
// first `left` ones; `right` strands follow the generator's inputs.
Matrix apply_on_strands(const Matrix& state, const Matrix& g, std::size_t n, std::size_t left,
                        std::size_t right) {
  const std::size_t n_left = int_pow(n, left);
  const std::size_t n_right = int_pow(n, right);
  const std::size_t n_in = g.cols();
  const std::size_t n_out = g.rows();
  const std::size_t cols = state.cols();

  std::vector<std::vector<std::size_t>> support(n_out);
  for (std::size_t o = 0; o < n_out; ++o)
    for (std::size_t i = 0; i < n_in; ++i)
      if (!g(o, i).is_zero()) support[o].push_back(i);

  Matrix out(n_left * n_out * n_right, cols);
  const auto total = static_cast<std::int64_t>(out.rows() * cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t flat = 0; flat < total; ++flat) {
    const auto r = static_cast<std::size_t>(flat) / cols;
    const auto c = static_cast<std::size_t>(flat) % cols;
    const std::size_t l = r / (n_out * n_right);
    const std::size_t o = (r / n_right) % n_out;
    const std::size_t rr = r % n_right;
    Rational acc;
    for (std::size_t i : support[o]) acc.add_product(g(o, i), state((l * n_in + i) * n_right + rr, c));
    out(r, c) = std::move(acc);
  }
  return out;
}

Matrix evaluate_with(const CobordismWord& w, const GeneratorTable& table) {
  const Boundary b = table.admit(w);
  const std::size_t n = table.dim();
  Matrix state = Matrix::identity(int_pow(n, b.source));
  std::size_t strands = b.source;
  for (const Slice& slice : w.slices) {
    std::size_t done = 0;  // output strands already produced in this slice
    for (Generator g : slice) {
      const Arity a = arity(g);
      if (g != Generator::Id) {
        state = apply_on_strands(state, table.matrix(g), n, done, strands - done - a.in);
      }
      strands = strands - a.in + a.out;
      done += a.out;
    }
  }
  return state;
}

Matrix serial_evaluate_with(const CobordismWord& w, const GeneratorTable& table) {
  const Boundary b = table.admit(w);
  Matrix acc = Matrix::identity(int_pow(table.dim(), b.source));
  for (const Slice& slice : w.slices) {
    Matrix layer = Matrix::identity(1);
    for (Generator g : slice) layer = serial::kron(layer, table.matrix(g));
    acc = serial::compose(layer, acc);
  }
  return acc;
}

Rational closed_value(const CobordismWord& w, const Matrix& m) {
  if (m.rows() != 1 || m.cols() != 1) {
    throw ArityError(0, "invariant needs a closed word, " + inline_form(w) + " is not closed");
  }
  return m(0, 0);
}

Boundary require_closed(const CobordismWord& w) {
  const Boundary b = validate(w);
  if (b.source != 0 || b.target != 0) {
    throw ArityError(0, "invariant needs a closed word, " + inline_form(w) + " has boundary (" +
                            std::to_string(b.source) + "," + std::to_string(b.target) + ")");
  }
  return b;
}

template <class Algebra>
AxiomReport monoidal_naturality(const CobordismWord& w, const Algebra& a, const Algebra& b,
                                const Algebra& ab) {
  const Boundary bd = validate(w);
  const Matrix lhs = compose(evaluate(w, ab), interleaver(bd.source, a.dim(), b.dim()));
  const Matrix rhs =
      compose(interleaver(bd.target, a.dim(), b.dim()), kron(evaluate(w, a), evaluate(w, b)));
  AxiomReport r;
  r.expect_equal("monoidal_naturality", lhs, rhs);
  return r;
}

template <class Algebra>
AxiomReport multiplicativity(const CobordismWord& w, const Algebra& a, const Algebra& b,
                             const Algebra& ab) {
  require_closed(w);
  AxiomReport r;
  r.expect_equal("multiplicativity", Matrix{{invariant(w, ab)}},
                 Matrix{{invariant(w, a) * invariant(w, b)}});
  return r;
}

template <class Algebra>
AxiomReport naturality(const Morphism<Algebra>& f, const CobordismWord& w) {
  const Boundary bd = validate(w);
  const Matrix lhs = compose(kron_power(f.map(), bd.target), evaluate(w, f.source()));
  const Matrix rhs = compose(evaluate(w, f.target()), kron_power(f.map(), bd.source));
  AxiomReport r;
  r.expect_equal("naturality", lhs, rhs);
  return r;
}

}  // namespace

Matrix evaluate(const CobordismWord& w, const FrobeniusAlgebra& a) {
  return evaluate_with(w, GeneratorTable(a, nullptr));
}

Matrix evaluate(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a) {
  return evaluate_with(w, GeneratorTable(a.base(), &a));
}

Rational invariant(const CobordismWord& w, const FrobeniusAlgebra& a) {
  require_closed(w);
  return closed_value(w, evaluate(w, a));
}

Rational invariant(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a) {
  require_closed(w);
  return closed_value(w, evaluate(w, a));
}

AxiomReport check_monoidal_naturality(const CobordismWord& w, const FrobeniusAlgebra& a,
                                      const FrobeniusAlgebra& b) {
  return monoidal_naturality(w, a, b, tensor(a, b));
}

AxiomReport check_monoidal_naturality(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a,
                                      const ExtendedFrobeniusAlgebra& b) {
  return monoidal_naturality(w, a, b, tensor_extended(a, b));
}

AxiomReport check_multiplicativity(const CobordismWord& w, const FrobeniusAlgebra& a,
                                   const FrobeniusAlgebra& b) {
  return multiplicativity(w, a, b, tensor(a, b));
}

AxiomReport check_multiplicativity(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a,
                                   const ExtendedFrobeniusAlgebra& b) {
  return multiplicativity(w, a, b, tensor_extended(a, b));
}

AxiomReport check_naturality(const FrobeniusMorphism& f, const CobordismWord& w) {
  return naturality(f, w);
}

AxiomReport check_naturality(const ExtendedFrobeniusMorphism& f, const CobordismWord& w) {
  return naturality(f, w);
}

namespace serial {

Matrix evaluate(const CobordismWord& w, const FrobeniusAlgebra& a) {
  return serial_evaluate_with(w, GeneratorTable(a, nullptr));
}

Matrix evaluate(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a) {
  return serial_evaluate_with(w, GeneratorTable(a.base(), &a));
}

}  // namespace serial

}  // namespace tqft
