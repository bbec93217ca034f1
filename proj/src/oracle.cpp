#include "grasspi/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grasspi/error.hpp"

namespace grasspi {

GrassmannElem random_element(const FieldPtr& field, unsigned m, Rng& rng, unsigned max_terms) {
  std::uniform_int_distribution<Scalar> any(0, field->order() - 1);
  std::uniform_int_distribution<Scalar> nonzero(1, field->order() - 1);
  std::vector<GrassmannElem::Term> terms;
  terms.push_back({0, any(rng)});
  if (m > 0) {
    const unsigned n = std::uniform_int_distribution<unsigned>(0, max_terms)(rng);
    std::uniform_int_distribution<unsigned> weight(1, std::min(m, 3u));
    std::uniform_int_distribution<unsigned> index(0, m - 1);
    for (unsigned t = 0; t < n; ++t) {
      const unsigned w = weight(rng);
      Mask mask = 0;
      while (popcount(mask) < w) mask |= Mask{1} << index(rng);
      terms.push_back({mask, nonzero(rng)});
    }
  }
  return GrassmannElem::from_terms(field, m, std::move(terms));
}

GrassmannAssignment random_assignment(const FieldPtr& field, const std::set<Var>& vars, unsigned m,
                                      Rng& rng) {
  GrassmannAssignment sigma(field, m);
  for (Var v : vars) sigma.set(v, random_element(field, m, rng));
  return sigma;
}

BatteryResult eval_battery(const FreePoly& f, unsigned m, std::size_t trials, std::uint64_t seed) {
  BatteryResult result;
  const auto vars = f.variables();
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    GrassmannAssignment sigma(f.field(), m);
    if (trial == 0 && m > 0) {
      unsigned i = 0;
      for (Var v : vars) sigma.set(v, GrassmannElem::generator(f.field(), m, (i++ % m) + 1));
    } else {
      sigma = random_assignment(f.field(), vars, m, rng);
    }
    ++result.trials_run;
    GrassmannElem value = evaluate(f, sigma);
    if (!value.is_zero()) {
      result.all_zero = false;
      result.counterexample = std::move(sigma);
      result.value = std::move(value);
      return result;
    }
  }
  return result;
}

namespace {

using MultiDegree = std::vector<unsigned>;

bool leq(const MultiDegree& a, const MultiDegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Words over local indices 0..n-1 mapped back through `vars`.
void words_with_multidegree(const MultiDegree& md, const std::vector<Var>& vars, std::vector<Word>& out) {
  MultiDegree left = md;
  std::size_t len = 0;
  for (unsigned d : md) len += d;
  Word w;
  std::function<void()> rec = [&]() {
    if (w.size() == len) {
      out.push_back(w);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      w.push_back(vars[i]);
      rec();
      w.pop_back();
      ++left[i];
    }
  };
  rec();
}

class Eliminator {
 public:
  Eliminator(const FieldPtr& field, std::size_t columns) : field_(field), columns_(columns) {}

  /// Returns true when the row raised the rank.
  bool add(std::vector<Scalar> row) {
    reduce(row);
    auto it = std::find_if(row.begin(), row.end(), [](Scalar c) { return c != 0; });
    if (it == row.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const Scalar inv = field_->inv(*it);
    for (auto& c : row) c = field_->mul(c, inv);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  void reduce(std::vector<Scalar>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c == 0) continue;
      const Scalar neg = field_->neg(c);
      const auto& r = rows_[i];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (r[j] != 0) v[j] = field_->add(v[j], field_->mul(neg, r[j]));
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  FieldPtr field_;
  std::size_t columns_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

// Solves target = sum x_i rows[i] for the accepted (independent) rows.
std::vector<Scalar> solve_combination(const FieldPtr& field, const std::vector<std::vector<Scalar>>& rows,
                                      const std::vector<Scalar>& target) {
  const std::size_t k = rows.size();
  const std::size_t n = target.size();
  // Row-reduce [rows | I] tracking combinations.
  std::vector<std::vector<Scalar>> a = rows;
  std::vector<std::vector<Scalar>> comb(k, std::vector<Scalar>(k, 0));
  for (std::size_t i = 0; i < k; ++i) comb[i][i] = 1;
  std::vector<std::size_t> pivot(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar c = a[i][pivot[j]];
      if (c == 0) continue;
      const Scalar neg = field->neg(c);
      for (std::size_t col = 0; col < n; ++col) a[i][col] = field->add(a[i][col], field->mul(neg, a[j][col]));
      for (std::size_t col = 0; col < k; ++col) {
        comb[i][col] = field->add(comb[i][col], field->mul(neg, comb[j][col]));
      }
    }
    std::size_t p = 0;
    while (p < n && a[i][p] == 0) ++p;
    if (p == n) throw InternalError("span certificate: accepted rows are dependent");
    const Scalar inv = field->inv(a[i][p]);
    for (auto& c : a[i]) c = field->mul(c, inv);
    for (auto& c : comb[i]) c = field->mul(c, inv);
    pivot[i] = p;
  }
  std::vector<Scalar> residual = target;
  std::vector<Scalar> x(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Scalar c = residual[pivot[i]];
    if (c == 0) continue;
    const Scalar neg = field->neg(c);
    for (std::size_t col = 0; col < n; ++col) {
      residual[col] = field->add(residual[col], field->mul(neg, a[i][col]));
    }
    for (std::size_t col = 0; col < k; ++col) x[col] = field->add(x[col], field->mul(c, comb[i][col]));
  }
  if (std::any_of(residual.begin(), residual.end(), [](Scalar c) { return c != 0; })) {
    throw InternalError("span certificate: target not reproduced");
  }
  return x;
}

}  // namespace

SpanResult bounded_span_member(const SpanProblem& problem) {
  const FreePoly& target = problem.target;
  const FieldPtr& field = target.field();
  SpanResult result;
  if (target.is_zero()) {
    result.member = true;
    return result;
  }
  const unsigned target_degree = total_degree(target);
  const unsigned cap = problem.degree_cap ? problem.degree_cap : target_degree;
  if (target_degree > cap) throw PreconditionError("span problem: target degree exceeds ambient cap");
  const unsigned pool_len = problem.pool_max_degree ? problem.pool_max_degree : target_degree;

  const std::set<Var> target_vars = target.variables();
  std::vector<Var> vars(target_vars.begin(), target_vars.end());
  if (problem.pool_fresh_variable) vars.push_back(target.max_variable() + 1);
  std::map<Var, std::size_t> local;
  for (std::size_t i = 0; i < vars.size(); ++i) local[vars[i]] = i;
  const std::size_t nv = vars.size();

  auto md_of = [&](const Word& w) -> std::optional<MultiDegree> {
    MultiDegree md(nv, 0);
    for (Var v : w) {
      auto it = local.find(v);
      if (it == local.end()) return std::nullopt;
      ++md[it->second];
    }
    return md;
  };

  // Target multidegrees and the column space they span.
  std::set<MultiDegree> targets;
  for (const auto& [w, c] : target.terms()) targets.insert(*md_of(w));
  MultiDegree max_md(nv, 0);
  for (const auto& md : targets) {
    for (std::size_t i = 0; i < nv; ++i) max_md[i] = std::max(max_md[i], md[i]);
  }
  std::map<Word, std::size_t> column;
  for (const auto& md : targets) {
    std::vector<Word> ws;
    words_with_multidegree(md, vars, ws);
    for (auto& w : ws) column.emplace(std::move(w), column.size());
  }
  result.columns = column.size();

  // Pool: the unit and all words of length <= pool_len fitting under max_md.
  std::vector<Word> pool{Word{}};
  {
    std::size_t total_pool = 1;
    MultiDegree used(nv, 0);
    Word w;
    std::function<void()> rec = [&]() {
      if (w.size() == pool_len) return;
      for (std::size_t i = 0; i < nv; ++i) {
        w.push_back(vars[i]);
        ++total_pool;
        ++used[i];
        if (used[i] <= max_md[i]) {
          pool.push_back(w);
          rec();
        }
        --used[i];
        w.pop_back();
      }
    };
    rec();
    result.pool_size = total_pool;
  }
  std::vector<MultiDegree> pool_md;
  for (const auto& w : pool) pool_md.push_back(*md_of(w));

  auto to_row = [&](const FreePoly& p) {
    std::vector<Scalar> row(column.size(), 0);
    for (const auto& [w, c] : p.terms()) row[column.at(w)] = c;
    return row;
  };
  auto fits = [&](const FreePoly& p) {
    for (const auto& [w, c] : p.terms()) {
      if (w.size() > cap || !column.count(w)) return false;
    }
    return true;
  };

  Eliminator elim(field, column.size());
  std::vector<Scalar> residual = to_row(target);
  auto residual_zero = [&]() {
    return std::all_of(residual.begin(), residual.end(), [](Scalar c) { return c == 0; });
  };
  std::vector<FreePoly> accepted;
  std::vector<std::vector<Scalar>> accepted_rows;
  bool done = false;

  auto offer = [&](const FreePoly& inst) {
    if (done || inst.is_zero() || !fits(inst)) return;
    if (++result.instances > problem.max_instances) {
      throw BoundError("span problem: more than " + std::to_string(problem.max_instances) + " instances");
    }
    auto row = to_row(inst);
    if (elim.add(row)) {
      accepted.push_back(inst);
      accepted_rows.push_back(std::move(row));
      residual = to_row(target);
      elim.reduce(residual);
      if (residual_zero()) done = true;
    }
  };

  for (const auto& gen : problem.generators) {
    if (done) break;
    if (!same_field(*gen.poly.field(), *field)) throw ConfigError("span generator over a different field");
    if (gen.poly.is_zero()) continue;
    const std::set<Var> gen_vars = gen.poly.variables();
    std::vector<Var> gvars(gen_vars.begin(), gen_vars.end());
    std::vector<unsigned> gmax;
    for (Var v : gvars) gmax.push_back(degree_in(gen.poly, v));
    std::vector<std::size_t> choice(gvars.size(), 0);
    MultiDegree acc(nv, 0);

    auto instantiate = [&]() {
      FreePoly inst(field);
      Word w;
      for (const auto& [gw, c] : gen.poly.terms()) {
        w.clear();
        for (Var v : gw) {
          const std::size_t k =
              static_cast<std::size_t>(std::lower_bound(gvars.begin(), gvars.end(), v) - gvars.begin());
          const Word& img = pool[choice[k]];
          w.insert(w.end(), img.begin(), img.end());
        }
        inst.add_term(w, c);
      }
      return inst;
    };

    auto emit = [&]() {
      FreePoly inst = instantiate();
      if (inst.is_zero()) return;
      if (gen.closure == Closure::kTSpace) {
        offer(inst);
        return;
      }
      // T-ideal: sandwich between pool monomials.
      std::set<MultiDegree> inst_mds;
      for (const auto& [w, c] : inst.terms()) {
        auto md = md_of(w);
        if (!md) return;
        inst_mds.insert(*md);
      }
      if (inst_mds.size() != 1) {
        offer(inst);
        return;
      }
      const MultiDegree& base = *inst_mds.begin();
      for (const auto& goal : targets) {
        if (!leq(base, goal)) continue;
        MultiDegree rest(nv);
        for (std::size_t i = 0; i < nv; ++i) rest[i] = goal[i] - base[i];
        for (std::size_t a = 0; a < pool.size() && !done; ++a) {
          if (!leq(pool_md[a], rest)) continue;
          MultiDegree right(nv);
          std::size_t right_len = 0;
          for (std::size_t i = 0; i < nv; ++i) {
            right[i] = rest[i] - pool_md[a][i];
            right_len += right[i];
          }
          if (right_len > pool_len) continue;
          std::vector<Word> rights;
          words_with_multidegree(right, vars, rights);
          const FreePoly left = FreePoly::monomial(field, pool[a]);
          for (const auto& b : rights) {
            offer(left * inst * FreePoly::monomial(field, b));
            if (done) break;
          }
        }
      }
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (done) return;
      if (k == gvars.size()) {
        emit();
        return;
      }
      for (std::size_t i = 0; i < pool.size() && !done; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < nv; ++j) {
          acc[j] += gmax[k] * pool_md[i][j];
          if (acc[j] > max_md[j]) ok = false;
        }
        if (ok) {
          choice[k] = i;
          rec(k + 1);
        }
        for (std::size_t j = 0; j < nv; ++j) acc[j] -= gmax[k] * pool_md[i][j];
      }
    };
    rec(0);
  }

  result.rank = elim.rank();
  if (!done) return result;

  const auto x = solve_combination(field, accepted_rows, to_row(target));
  FreePoly check(field);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    check += accepted[i].scaled(x[i]);
    result.certificate.emplace_back(x[i], accepted[i]);
  }
  if (!(check == target)) throw InternalError("span certificate does not expand to the target");
  result.member = true;
  return result;
}

FieldIdentityResult field_identity_bruteforce(const FreePoly& f) {
  const FieldPtr& field = f.field();
  const std::uint32_t q = field->order();
  FieldIdentityResult result;
  for (const auto& [w, c] : f.terms()) {
    if (!std::is_sorted(w.begin(), w.end())) throw PreconditionError("field identity check needs commutative words");
  }
  const auto vars = f.variables();
  result.variables.assign(vars.begin(), vars.end());
  const std::size_t n = result.variables.size();
  if (n > 6) throw BoundError("field identity check supports at most 6 variables");
  std::vector<Scalar> point(n, 0);
  std::map<Var, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[result.variables[i]] = i;
  while (true) {
    Scalar value = 0;
    for (const auto& [w, c] : f.terms()) {
      Scalar t = c;
      for (Var v : w) t = field->mul(t, point[index[v]]);
      value = field->add(value, t);
    }
    if (value != 0) {
      result.zero = false;
      result.point = point;
      result.value = value;
      return result;
    }
    std::size_t i = 0;
    while (i < n && ++point[i] == q) point[i++] = 0;
    if (i == n) break;
  }
  return result;
}

BruteDomPower brute_dom_power(const FieldElem& lambda, unsigned n, unsigned gamma, bool with_odd) {
  const unsigned bound = 2 * n + (with_odd ? 1 : 0);
  if (bound > 20 || gamma > 12) throw BoundError("brute_dom_power: needs 2n+1 <= 20 and gamma <= 12");
  const FieldPtr& field = lambda.field();
  GrassmannElem base = GrassmannElem::scalar(field, bound, lambda.code());
  for (unsigned i = 1; i <= n; ++i) {
    base += GrassmannElem::basis(field, bound, Mask{3} << (2 * (i - 1)));
  }
  if (with_odd) base += GrassmannElem::generator(field, bound, 2 * n + 1);
  GrassmannElem power = GrassmannElem::scalar(field, bound, 1);
  for (unsigned i = 0; i < gamma; ++i) power = power * base;

  unsigned nominal = 0;
  if (with_odd && gamma > n) {
    nominal = 2 * n + 1;
  } else {
    nominal = 2 * std::min(gamma, n);
  }
  std::vector<GrassmannElem::Term> at_nominal;
  for (const auto& t : power.terms()) {
    if (popcount(t.first) == nominal) at_nominal.push_back(t);
  }
  auto swd = support_weight_dom(power);
  return {GrassmannElem::from_terms(field, bound, std::move(at_nominal)), nominal, swd.dom, swd.weight};
}

}  // namespace grasspi
