#pragma once
#include <memory>

#include "pathhom/quiver.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// The minimal ambient-category interface the nerve engine needs: compose two
// morphism tokens and classify the outcome. Token equality is id equality;
// every oracle keeps its own canonical token table. Oracles over infinite
// ambients intern tokens on demand and are not thread-safe.
class CompositionOracle {
 public:
  enum class Kind { Identity, Arrow, Other };
  struct Term {
    int token;
    Int coeff;
  };

  virtual ~CompositionOracle() = default;

  virtual int vertex_count() const = 0;
  virtual int identity_token(int vertex) = 0;
  virtual int arrow_token(int arrow) = 0;
  virtual Kind classify(int token) const = 0;
  virtual int token_arrow(int token) const = 0;   // valid for Kind::Arrow
  virtual int token_vertex(int token) const = 0;  // valid for Kind::Identity
  virtual int tail(int token) const = 0;
  virtual int head(int token) const = 0;
  virtual std::string token_name(int token) const = 0;

  // b after a. For set-level ambients the result is one term with
  // coefficient 1; linear ambients may return longer combinations.
  virtual std::vector<Term> compose(int a, int b) = 0;

  // Scale applied to the two exterior faces of the Moore differential.
  virtual Int exterior_scale() const { return 1; }

  virtual bool ambient_finite() const { return false; }
  // All non-identity morphism tokens, when finite.
  virtual std::vector<int> ambient_tokens();
};

// Ambient c(V): exactly one morphism between every ordered pair of vertices.
// Composition forgets the path taken. Arrows of the quiver must be pairwise
// distinct vertex pairs (a digraph).
std::unique_ptr<CompositionOracle> make_cv_oracle(const Quiver& q);

// Ambient Z(Q): one fresh morphism z(v,u) adjoined for every ordered vertex
// pair; every composition of non-identity morphisms is the fresh one.
std::unique_ptr<CompositionOracle> make_square_commutative_oracle(const Quiver& q);

// Free category on Q: compositions concatenate and never collide.
std::unique_ptr<CompositionOracle> make_free_category_oracle(const Quiver& q);

// Linear ambient on the complete k-quiver: the composite of any two arrows
// is the sum of all k parallel arrows, and exterior faces are scaled by k.
std::unique_ptr<CompositionOracle> make_k_power_oracle(const Quiver& q, int k);

// Product of two ambients; arrows of the box quiver are the mixed pairs.
std::unique_ptr<CompositionOracle> make_product_oracle(const BoxQuiver& bq,
                                                       CompositionOracle& left,
                                                       CompositionOracle& right);

}  // namespace pathhom
