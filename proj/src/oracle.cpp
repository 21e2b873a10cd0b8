#include "pathhom/oracle.hpp"

#include <map>

namespace pathhom {

std::vector<int> CompositionOracle::ambient_tokens() {
  throw ValidationError("InfiniteAmbient", "ambient category is not degreewise finite");
}

namespace {

// Shared token bookkeeping: identities first (one per vertex), then arrows,
// then oracle-specific tokens.
class TableOracle : public CompositionOracle {
 public:
  explicit TableOracle(const Quiver& q) : q_(q) {
    for (int v = 0; v < q.vertex_count(); ++v)
      add_token(Kind::Identity, v, v, v, "1_" + q.vertices[v]);
    for (int a = 0; a < q.arrow_count(); ++a)
      add_token(Kind::Arrow, a, q.arrows[a].tail, q.arrows[a].head, q.arrows[a].label);
  }

  int vertex_count() const override { return q_.vertex_count(); }
  int identity_token(int vertex) override { return vertex; }
  int arrow_token(int arrow) override { return q_.vertex_count() + arrow; }
  Kind classify(int token) const override { return kind_[token]; }
  int token_arrow(int token) const override {
    internal_check(kind_[token] == Kind::Arrow, "TokenKind", "not an arrow token");
    return payload_[token];
  }
  int token_vertex(int token) const override {
    internal_check(kind_[token] == Kind::Identity, "TokenKind", "not an identity token");
    return payload_[token];
  }
  int tail(int token) const override { return tail_[token]; }
  int head(int token) const override { return head_[token]; }
  std::string token_name(int token) const override { return name_[token]; }

 protected:
  int add_token(Kind kind, int payload, int tail, int head, const std::string& name) {
    kind_.push_back(kind);
    payload_.push_back(payload);
    tail_.push_back(tail);
    head_.push_back(head);
    name_.push_back(name);
    return int(kind_.size()) - 1;
  }
  int token_count() const { return int(kind_.size()); }

  const Quiver& q_;
  std::vector<Kind> kind_;
  std::vector<int> payload_, tail_, head_;
  std::vector<std::string> name_;
};

// c(V): the unique morphism v -> u is the ordered pair.
class CvOracle : public TableOracle {
 public:
  explicit CvOracle(const Quiver& q) : TableOracle(q) {
    std::map<std::pair<int, int>, int> arrow_by_pair;
    for (int a = 0; a < q.arrow_count(); ++a) {
      auto key = std::make_pair(q.arrows[a].tail, q.arrows[a].head);
      require(!arrow_by_pair.count(key), "ValidationError",
              "parallel arrows not allowed in the one-morphism ambient");
      require(key.first != key.second, "ValidationError",
              "degenerate arrows are implicit and may not be stored");
      arrow_by_pair[key] = a;
    }
    pair_token_.assign(q.vertex_count() * q.vertex_count(), -1);
    for (int v = 0; v < q.vertex_count(); ++v) pair_token_[v * q.vertex_count() + v] = v;
    for (auto& [key, a] : arrow_by_pair)
      pair_token_[key.first * q.vertex_count() + key.second] = arrow_token(a);
    for (int v = 0; v < q.vertex_count(); ++v)
      for (int u = 0; u < q.vertex_count(); ++u) {
        int& slot = pair_token_[v * q.vertex_count() + u];
        if (slot < 0)
          slot = add_token(Kind::Other, -1, v, u, "[" + q.vertices[v] + ">" + q.vertices[u] + "]");
      }
  }

  std::vector<Term> compose(int a, int b) override {
    internal_check(head(a) == tail(b), "NonComposable", "corrupted tuple");
    return {{pair_token_[tail(a) * q_.vertex_count() + head(b)], 1}};
  }

  bool ambient_finite() const override { return true; }
  std::vector<int> ambient_tokens() override {
    std::vector<int> out;
    for (int v = 0; v < q_.vertex_count(); ++v)
      for (int u = 0; u < q_.vertex_count(); ++u)
        if (v != u) out.push_back(pair_token_[v * q_.vertex_count() + u]);
    return out;
  }

 private:
  std::vector<int> pair_token_;
};

// Z(Q): any composite of non-identity morphisms is the adjoined z(v,u).
class SquareCommutativeOracle : public TableOracle {
 public:
  explicit SquareCommutativeOracle(const Quiver& q) : TableOracle(q) {
    z_token_.assign(q.vertex_count() * q.vertex_count(), -1);
    for (int v = 0; v < q.vertex_count(); ++v)
      for (int u = 0; u < q.vertex_count(); ++u)
        z_token_[v * q.vertex_count() + u] =
            add_token(Kind::Other, -1, v, u, "z(" + q.vertices[v] + "," + q.vertices[u] + ")");
  }

  std::vector<Term> compose(int a, int b) override {
    internal_check(head(a) == tail(b), "NonComposable", "corrupted tuple");
    return {{z_token_[tail(a) * q_.vertex_count() + head(b)], 1}};
  }

  bool ambient_finite() const override { return true; }
  std::vector<int> ambient_tokens() override {
    std::vector<int> out;
    for (int a = 0; a < q_.arrow_count(); ++a) out.push_back(arrow_token(a));
    for (int v = 0; v < q_.vertex_count(); ++v)
      for (int u = 0; u < q_.vertex_count(); ++u)
        out.push_back(z_token_[v * q_.vertex_count() + u]);
    return out;
  }

 private:
  std::vector<int> z_token_;
};

// Free category: morphisms are arrow words, interned on demand.
class FreeCategoryOracle : public TableOracle {
 public:
  explicit FreeCategoryOracle(const Quiver& q) : TableOracle(q) {
    for (int a = 0; a < q.arrow_count(); ++a) word_of_[{a}] = arrow_token(a);
  }

  std::vector<Term> compose(int a, int b) override {
    internal_check(head(a) == tail(b), "NonComposable", "corrupted tuple");
    std::vector<int> word = word_at(a);
    std::vector<int> wb = word_at(b);
    word.insert(word.end(), wb.begin(), wb.end());
    auto it = word_of_.find(word);
    if (it == word_of_.end()) {
      std::string name;
      for (int arrow : word) name += (name.empty() ? "" : "*") + q_.arrows[arrow].label;
      int tok = add_token(Kind::Other, -1, tail(a), head(b), name);
      words_.emplace(tok, word);
      it = word_of_.emplace(std::move(word), tok).first;
    }
    return {{it->second, 1}};
  }

 private:
  std::vector<int> word_at(int token) const {
    if (classify(token) == Kind::Arrow) return {token_arrow(token)};
    return words_.at(token);
  }
  std::map<std::vector<int>, int> word_of_;
  std::map<int, std::vector<int>> words_;
};

// Complete k-quiver ambient with summed compositions and k-scaled exterior
// faces. Arrows of Q occupy the first slots of each ordered vertex pair.
class KPowerOracle : public TableOracle {
 public:
  KPowerOracle(const Quiver& q, int k) : TableOracle(q), k_(k) {
    require(k >= 1, "ValidationError", "k must be positive");
    require(q.power() <= k, "PowerExceeded",
            "quiver power " + std::to_string(q.power()) + " exceeds k = " + std::to_string(k));
    slot_.assign(q.vertex_count() * q.vertex_count() * k, -1);
    std::map<std::pair<int, int>, int> used;
    for (int a = 0; a < q.arrow_count(); ++a) {
      auto key = std::make_pair(q.arrows[a].tail, q.arrows[a].head);
      int s = used[key]++;
      slot_[slot_index(key.first, key.second, s)] = arrow_token(a);
    }
    for (int v = 0; v < q.vertex_count(); ++v)
      for (int u = 0; u < q.vertex_count(); ++u)
        for (int s = 0; s < k; ++s) {
          int& tok = slot_[slot_index(v, u, s)];
          if (tok < 0)
            tok = add_token(Kind::Other, -1, v, u,
                            "pad" + std::to_string(s) + "(" + q_.vertices[v] + "," +
                                q_.vertices[u] + ")");
        }
  }

  std::vector<Term> compose(int a, int b) override {
    internal_check(head(a) == tail(b), "NonComposable", "corrupted tuple");
    std::vector<Term> out;
    for (int s = 0; s < k_; ++s) out.push_back({slot_[slot_index(tail(a), head(b), s)], 1});
    return out;
  }

  Int exterior_scale() const override { return k_; }

 private:
  int slot_index(int v, int u, int s) const { return (v * q_.vertex_count() + u) * k_ + s; }
  int k_;
  std::vector<int> slot_;
};

// Product ambient over a box quiver: compose componentwise in the factors.
class ProductOracle : public CompositionOracle {
 public:
  ProductOracle(const BoxQuiver& bq, CompositionOracle& left, CompositionOracle& right)
      : bq_(bq), left_(left), right_(right) {
    require(left.exterior_scale() == 1 && right.exterior_scale() == 1, "ValidationError",
            "product ambient needs set-level factors");
  }

  int vertex_count() const override { return int(bq_.vertex_pair.size()); }
  int identity_token(int vertex) override {
    auto [lv, rv] = bq_.vertex_pair[vertex];
    return intern(left_.identity_token(lv), right_.identity_token(rv));
  }
  int arrow_token(int arrow) override {
    const auto& info = bq_.arrow_info[arrow];
    if (info.side == 0)
      return intern(left_.arrow_token(info.arrow), right_.identity_token(info.parked));
    return intern(left_.identity_token(info.parked), right_.arrow_token(info.arrow));
  }
  Kind classify(int token) const override {
    auto [lt, rt] = pair_.at(token);
    Kind kl = left_.classify(lt), kr = right_.classify(rt);
    if (kl == Kind::Identity && kr == Kind::Identity) return Kind::Identity;
    if (kl == Kind::Identity && kr == Kind::Arrow) return Kind::Arrow;
    if (kl == Kind::Arrow && kr == Kind::Identity) return Kind::Arrow;
    return Kind::Other;
  }
  int token_arrow(int token) const override {
    auto [lt, rt] = pair_.at(token);
    if (left_.classify(lt) == Kind::Arrow)
      return bq_.arrow_of(0, left_.token_arrow(lt), right_.token_vertex(rt));
    return bq_.arrow_of(1, right_.token_arrow(rt), left_.token_vertex(lt));
  }
  int token_vertex(int token) const override {
    auto [lt, rt] = pair_.at(token);
    return bq_.vertex_of(left_.token_vertex(lt), right_.token_vertex(rt));
  }
  int tail(int token) const override {
    auto [lt, rt] = pair_.at(token);
    return bq_.vertex_of(left_.tail(lt), right_.tail(rt));
  }
  int head(int token) const override {
    auto [lt, rt] = pair_.at(token);
    return bq_.vertex_of(left_.head(lt), right_.head(rt));
  }
  std::string token_name(int token) const override {
    auto [lt, rt] = pair_.at(token);
    return "(" + left_.token_name(lt) + "," + right_.token_name(rt) + ")";
  }

  std::vector<Term> compose(int a, int b) override {
    auto [la, ra] = pair_.at(a);
    auto [lb, rb] = pair_.at(b);
    auto lc = compose_in(left_, la, lb);
    auto rc = compose_in(right_, ra, rb);
    return {{intern(lc, rc), 1}};
  }

  bool ambient_finite() const override {
    return left_.ambient_finite() && right_.ambient_finite();
  }
  std::vector<int> ambient_tokens() override {
    std::vector<int> out;
    auto lids = with_identities(left_);
    auto rids = with_identities(right_);
    for (int a : lids)
      for (int b : rids) {
        if (left_.classify(a) == Kind::Identity && right_.classify(b) == Kind::Identity) continue;
        out.push_back(intern(a, b));
      }
    return out;
  }

 private:
  static std::vector<int> with_identities(CompositionOracle& o) {
    std::vector<int> out;
    for (int v = 0; v < o.vertex_count(); ++v) out.push_back(o.identity_token(v));
    auto toks = o.ambient_tokens();
    out.insert(out.end(), toks.begin(), toks.end());
    return out;
  }

  // Single-term composition helper for set-level factors; identity operands
  // short-circuit so factor oracles never see them.
  static int compose_in(CompositionOracle& o, int a, int b) {
    if (o.classify(a) == Kind::Identity) return b;
    if (o.classify(b) == Kind::Identity) return a;
    auto terms = o.compose(a, b);
    internal_check(terms.size() == 1 && terms[0].coeff == 1, "NotSetLevel",
                   "product ambient needs set-level factors");
    return terms[0].token;
  }

  int intern(int lt, int rt) {
    auto key = std::make_pair(lt, rt);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = int(pair_.size());
    pair_.push_back(key);
    ids_.emplace(key, id);
    return id;
  }

  const BoxQuiver& bq_;
  CompositionOracle& left_;
  CompositionOracle& right_;
  std::vector<std::pair<int, int>> pair_;
  std::map<std::pair<int, int>, int> ids_;
};

}  // namespace

std::unique_ptr<CompositionOracle> make_cv_oracle(const Quiver& q) {
  return std::make_unique<CvOracle>(q);
}
std::unique_ptr<CompositionOracle> make_square_commutative_oracle(const Quiver& q) {
  return std::make_unique<SquareCommutativeOracle>(q);
}
std::unique_ptr<CompositionOracle> make_free_category_oracle(const Quiver& q) {
  return std::make_unique<FreeCategoryOracle>(q);
}
std::unique_ptr<CompositionOracle> make_k_power_oracle(const Quiver& q, int k) {
  return std::make_unique<KPowerOracle>(q, k);
}
std::unique_ptr<CompositionOracle> make_product_oracle(const BoxQuiver& bq,
                                                       CompositionOracle& left,
                                                       CompositionOracle& right) {
  return std::make_unique<ProductOracle>(bq, left, right);
}

}  // namespace pathhom
