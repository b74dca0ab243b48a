#include "asklab/grouplab.hpp"

#include <algorithm>
#include <deque>

namespace asklab {

namespace {

struct UnionFind {
    explicit UnionFind(std::uint64_t n) : parent(n) {
        for (std::uint64_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::uint64_t find(std::uint64_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint64_t a, std::uint64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::uint64_t components() {
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++c;
        return c;
    }
    std::vector<std::uint64_t> parent;
};

std::uint64_t checked_pow(std::uint64_t q, int e, std::uint64_t cap, const char* what) {
    Int total = int_pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(e));
    if (total > static_cast<unsigned long>(cap))
        throw BudgetExceededError(std::string(what) + " needs " + total.get_str() +
                                  " points, budget is " + std::to_string(cap));
    return total.get_ui();
}

// Generators of the additive group of F_q^m: p-power multiples of the unit
// vectors, in coordinate-major order.
std::vector<std::uint64_t> additive_generators(const FiniteField& k, int m) {
    std::vector<std::uint64_t> gens;
    std::uint64_t place = 1;
    for (int t = 0; t < m; ++t) {
        std::uint64_t digit = 1;
        for (unsigned j = 0; j < k.f(); ++j) {
            gens.push_back(digit * place);
            digit *= k.p();
        }
        place *= k.q();
    }
    return gens;
}

}  // namespace

std::uint64_t CoordinateGroup::encode(const std::vector<FiniteField::Elem>& c) const {
    std::uint64_t idx = 0, place = 1;
    for (int t = 0; t < ncoords_; ++t) {
        idx += c[t] * place;
        place *= field_->q();
    }
    return idx;
}

std::vector<FiniteField::Elem> CoordinateGroup::decode(std::uint64_t idx) const {
    std::vector<FiniteField::Elem> c(ncoords_);
    for (int t = 0; t < ncoords_; ++t) {
        c[t] = static_cast<FiniteField::Elem>(idx % field_->q());
        idx /= field_->q();
    }
    return c;
}

void CoordinateGroup::law(const std::vector<FiniteField::Elem>& a,
                          const std::vector<FiniteField::Elem>& b,
                          std::vector<FiniteField::Elem>& out) const {
    const FiniteField& k = *field_;
    out.resize(ncoords_);
    for (int t = 0; t < ncoords_; ++t) out[t] = k.add(a[t], b[t]);
    auto cc = [&](int kk, int ii, int jj) -> FiniteField::Elem {
        return tensor_[(static_cast<std::size_t>(kk) * d_ + ii) * e_ + jj];
    };
    if (kind_ == Kind::baer) {
        // out_y += beta(a_module, b_module); beta(e_k, e_k') = e_k * e_k', k < k'
        for (int k1 = 0; k1 < l_; ++k1) {
            if (a[k1] == 0) continue;
            for (int k2 = k1 + 1; k2 < l_; ++k2) {
                if (b[k2] == 0) continue;
                FiniteField::Elem coef = k.mul(a[k1], b[k2]);
                for (int j = 0; j < e_; ++j)
                    out[l_ + j] = k.add(out[l_ + j], k.mul(coef, cc(k2, k1, j)));
            }
        }
    } else {
        // out_w += a_domain * b_module
        for (int i = 0; i < d_; ++i) {
            if (a[l_ + i] == 0) continue;
            for (int k2 = 0; k2 < l_; ++k2) {
                if (b[k2] == 0) continue;
                FiniteField::Elem coef = k.mul(a[l_ + i], b[k2]);
                for (int j = 0; j < e_; ++j)
                    out[l_ + d_ + j] = k.add(out[l_ + d_ + j], k.mul(coef, cc(k2, i, j)));
            }
        }
    }
}

std::uint64_t CoordinateGroup::mul(std::uint64_t a, std::uint64_t b) const {
    std::vector<FiniteField::Elem> ca = decode(a), cb = decode(b), out;
    law(ca, cb, out);
    return encode(out);
}

std::uint64_t CoordinateGroup::inv(std::uint64_t a) const {
    const FiniteField& k = *field_;
    std::vector<FiniteField::Elem> ca = decode(a), r(ncoords_);
    for (int t = 0; t < ncoords_; ++t) r[t] = k.neg(ca[t]);
    auto cc = [&](int kk, int ii, int jj) -> FiniteField::Elem {
        return tensor_[(static_cast<std::size_t>(kk) * d_ + ii) * e_ + jj];
    };
    if (kind_ == Kind::baer) {
        // (a, y)^{-1} = (-a, -y + beta(a, a))
        for (int k1 = 0; k1 < l_; ++k1) {
            if (ca[k1] == 0) continue;
            for (int k2 = k1 + 1; k2 < l_; ++k2) {
                if (ca[k2] == 0) continue;
                FiniteField::Elem coef = k.mul(ca[k1], ca[k2]);
                for (int j = 0; j < e_; ++j)
                    r[l_ + j] = k.add(r[l_ + j], k.mul(coef, cc(k2, k1, j)));
            }
        }
    } else {
        // (a, v, w)^{-1} = (-a, -v, -w + v * a)
        for (int i = 0; i < d_; ++i) {
            if (ca[l_ + i] == 0) continue;
            for (int k2 = 0; k2 < l_; ++k2) {
                if (ca[k2] == 0) continue;
                FiniteField::Elem coef = k.mul(ca[l_ + i], ca[k2]);
                for (int j = 0; j < e_; ++j)
                    r[l_ + d_ + j] = k.add(r[l_ + d_ + j], k.mul(coef, cc(k2, i, j)));
            }
        }
    }
    return encode(r);
}

std::string CoordinateGroup::describe(std::uint64_t a) const {
    std::vector<FiniteField::Elem> c = decode(a);
    std::string out = "(";
    int at = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += " | ";
        for (int t = 0; t < blocks_[b]; ++t) {
            if (t) out += ",";
            out += std::to_string(c[at++]);
        }
    }
    return out + ")";
}

std::unique_ptr<CoordinateGroup> CoordinateGroup::build(Kind kind, const ModuleRep& rep,
                                                        PrimePower q, const Budget& budget) {
    const bool heis = kind == Kind::heisenberg;
    const int ncoords = rep.l() + (heis ? rep.d() : 0) + rep.e();
    std::string label = std::string(heis ? "heisenberg" : "baer") + "(" +
                        (rep.name().empty() ? "theta" : rep.name()) +
                        ") q=" + std::to_string(q.q);
    std::uint64_t order = checked_pow(q.q, ncoords, budget.points, label.c_str());

    auto g = std::unique_ptr<CoordinateGroup>(new CoordinateGroup(kind, std::move(label)));
    g->field_ = get_field(q);
    g->l_ = rep.l();
    g->d_ = rep.d();
    g->e_ = rep.e();
    g->ncoords_ = ncoords;
    g->blocks_ = heis ? std::vector<int>{rep.l(), rep.d(), rep.e()}
                      : std::vector<int>{rep.l(), rep.e()};
    g->tensor_.resize(static_cast<std::size_t>(rep.l()) * rep.d() * rep.e());
    for (int k = 0; k < rep.l(); ++k)
        for (int i = 0; i < rep.d(); ++i)
            for (int j = 0; j < rep.e(); ++j)
                g->tensor_[(static_cast<std::size_t>(k) * rep.d() + i) * rep.e() + j] =
                    g->field_->from_int(rep.c(k, i, j));
    g->order_ = order;
    g->id_ = 0;
    g->gens_ = additive_generators(*g->field_, ncoords);
    g->expected_order = order;
    return g;
}

std::unique_ptr<CoordinateGroup> baer_group(const ModuleRep& rep, PrimePower q,
                                            const Budget& budget) {
    if (!is_alternating(rep))
        throw NotAlternatingError("baer group requires an alternating representation");
    return CoordinateGroup::build(GroupTable::Kind::baer, rep, q, budget);
}

std::unique_ptr<CoordinateGroup> heisenberg_group(const ModuleRep& rep, PrimePower q,
                                                  const Budget& budget) {
    return CoordinateGroup::build(GroupTable::Kind::heisenberg, rep, q, budget);
}

std::string MatrixGroup::encode(const FqMatrix& m) const {
    std::string key;
    if (unitriangular_) {
        key.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                key.push_back(static_cast<char>(m.at(i, j)));
    } else {
        key.reserve(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) key.push_back(static_cast<char>(m.at(i, j)));
    }
    return key;
}

FqMatrix MatrixGroup::element(std::uint64_t idx) const {
    const std::string& key = elems_[idx];
    FqMatrix m(*field_, n_, n_);
    std::size_t at = 0;
    if (unitriangular_) {
        for (int i = 0; i < n_; ++i) {
            m.at(i, i) = field_->one();
            for (int j = i + 1; j < n_; ++j)
                m.at(i, j) = static_cast<FiniteField::Elem>(
                    static_cast<unsigned char>(key[at++]));
        }
    } else {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m.at(i, j) = static_cast<FiniteField::Elem>(
                    static_cast<unsigned char>(key[at++]));
    }
    return m;
}

std::uint64_t MatrixGroup::index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end())
        throw std::logic_error("matrix group closure is missing a product");
    return it->second;
}

std::uint64_t MatrixGroup::mul(std::uint64_t a, std::uint64_t b) const {
    return index_of(encode(element(a).mul(element(b))));
}

std::uint64_t MatrixGroup::inv(std::uint64_t a) const {
    return index_of(encode(element(a).inverse()));
}

std::string MatrixGroup::describe(std::uint64_t a) const {
    FqMatrix m = element(a);
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) out += "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += std::to_string(m.at(i, j));
        }
    }
    return out + "]";
}

std::unique_ptr<MatrixGroup> MatrixGroup::closure(Kind kind, std::string label,
                                                  std::shared_ptr<const FiniteField> field,
                                                  int n, bool unitriangular,
                                                  const std::vector<FqMatrix>& gens,
                                                  const Budget& budget) {
    if (field->q() > 255)
        throw BudgetExceededError("matrix groups are limited to q <= 255");
    auto g = std::unique_ptr<MatrixGroup>(new MatrixGroup(kind, std::move(label)));
    g->field_ = std::move(field);
    g->n_ = n;
    g->unitriangular_ = unitriangular;

    auto push = [&](const FqMatrix& m) -> std::pair<std::uint64_t, bool> {
        std::string key = g->encode(m);
        auto [it, fresh] = g->index_.try_emplace(key, g->elems_.size());
        if (fresh) {
            if (g->elems_.size() >= budget.closure_cap)
                throw BudgetExceededError("matrix closure exceeded cap " +
                                          std::to_string(budget.closure_cap));
            g->elems_.push_back(std::move(key));
        }
        return {it->second, fresh};
    };

    push(FqMatrix::identity(*g->field_, n));
    for (const FqMatrix& m : gens) push(m);
    // generator indices, deduplicated, excluding the identity
    for (const FqMatrix& m : gens) {
        std::uint64_t idx = g->index_.at(g->encode(m));
        if (idx != 0 && std::find(g->gens_.begin(), g->gens_.end(), idx) == g->gens_.end())
            g->gens_.push_back(idx);
    }

    for (std::uint64_t head = 0; head < g->elems_.size(); ++head) {
        FqMatrix cur = g->element(head);
        for (const FqMatrix& m : gens) push(cur.mul(m));
    }
    g->order_ = g->elems_.size();
    g->id_ = 0;
    for (std::uint64_t i = 0; i < g->order_; ++i)
        g->inv(i);  // verifies every inverse landed in the closure
    return g;
}

Int class_count_naive(const GroupTable& g, const Budget& budget) {
    if (g.order() > budget.naive_class_cap)
        throw BudgetExceededError("group of order " + std::to_string(g.order()) +
                                  " exceeds the naive class-counting cap " +
                                  std::to_string(budget.naive_class_cap));
    UnionFind uf(g.order());
    std::vector<std::uint64_t> hs = g.generators(), hinvs;
    hinvs.reserve(hs.size());
    for (std::uint64_t h : hs) hinvs.push_back(g.inv(h));
    for (std::uint64_t x = 0; x < g.order(); ++x)
        for (std::size_t i = 0; i < hs.size(); ++i)
            uf.unite(x, g.mul(g.mul(hinvs[i], x), hs[i]));
    return Int(static_cast<unsigned long>(uf.components()));
}

namespace {

Int exact_integer(const Rat& value, const char* what) {
    if (value.get_den() != 1)
        throw NonIntegralError(std::string(what) + " produced the non-integer " +
                               value.get_str());
    return Int(value.get_num());
}

}  // namespace

Int class_count_structural(const ModuleRep& rep, PrimePower q, GroupConstruction kind,
                           const Budget& budget, unsigned threads) {
    if (kind == GroupConstruction::baer) {
        if (!is_alternating(rep))
            throw NotAlternatingError("structural Baer count needs an alternating tensor");
        Rat v = ask(rep, q, budget, threads).to_rational() * rat_pow(q.q, rep.e());
        return exact_integer(v, "q^e ask(theta)");
    }
    Rat via_hull =
        ask(alternating_hull(rep), q, budget, threads).to_rational() * rat_pow(q.q, rep.e());
    Rat via_dual = ask(mth_power(knuth_dual(rep), 2), q, budget, threads).to_rational() *
                   rat_pow(q.q, rep.l() - rep.d() + rep.e());
    if (via_hull != via_dual)
        throw NonIntegralError("Heisenberg class formulas disagree: " + via_hull.get_str() +
                               " vs " + via_dual.get_str());
    return exact_integer(via_hull, "q^e ask(hull(theta))");
}

Int burnside_orbits(const EnumeratedAction& action, const Budget& budget) {
    Int work = Int(static_cast<unsigned long>(action.space_size)) *
               Int(static_cast<unsigned long>(action.group_size));
    if (work > static_cast<unsigned long>(budget.points))
        throw BudgetExceededError("burnside enumeration needs " + work.get_str() +
                                  " points, budget is " + std::to_string(budget.points));
    if (action.group_size == 0 || action.space_size == 0)
        throw NotAnActionError("empty group or space");

    // deterministic spot checks before trusting the enumeration
    std::uint64_t xstep = std::max<std::uint64_t>(1, action.space_size / 16);
    std::uint64_t gstep = std::max<std::uint64_t>(1, action.group_size / 8);
    for (std::uint64_t x = 0; x < action.space_size; x += xstep) {
        if (action.act(x, action.group_id) != x)
            throw NotAnActionError("identity moves point " + std::to_string(x));
        for (std::uint64_t a = 0; a < action.group_size; a += gstep)
            for (std::uint64_t b = 0; b < action.group_size; b += gstep)
                if (action.act(action.act(x, a), b) != action.act(x, action.gmul(a, b)))
                    throw NotAnActionError("compatibility fails at x=" + std::to_string(x));
    }

    Int fixed = 0;
    for (std::uint64_t a = 0; a < action.group_size; ++a) {
        std::uint64_t count = 0;
        for (std::uint64_t x = 0; x < action.space_size; ++x)
            if (action.act(x, a) == x) ++count;
        fixed += static_cast<unsigned long>(count);
    }
    Int orbits, rem;
    mpz_tdiv_qr(orbits.get_mpz_t(), rem.get_mpz_t(), fixed.get_mpz_t(),
                Int(static_cast<unsigned long>(action.group_size)).get_mpz_t());
    if (rem != 0)
        throw NonIntegralError("fixed-pair count " + fixed.get_str() +
                               " is not divisible by the group order");
    return orbits;
}

Int mtheta_orbit_count(const ModuleRep& rep, PrimePower q, OrbitMode mode,
                       const Budget& budget, unsigned threads) {
    auto field = get_field(q);
    const FiniteField& k = *field;
    const int l = rep.l(), d = rep.d(), e = rep.e();

    // reduced tensor, indexed like the representation
    std::vector<FiniteField::Elem> rt(static_cast<std::size_t>(l) * d * e);
    for (int kk = 0; kk < l; ++kk)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < e; ++j)
                rt[(static_cast<std::size_t>(kk) * d + i) * e + j] = k.from_int(rep.c(kk, i, j));
    auto star = [&](const std::vector<FiniteField::Elem>& x,
                    const std::vector<FiniteField::Elem>& a,
                    std::vector<FiniteField::Elem>& out) {
        out.assign(e, 0);
        for (int i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (int kk = 0; kk < l; ++kk) {
                if (a[kk] == 0) continue;
                FiniteField::Elem coef = k.mul(x[i], a[kk]);
                for (int j = 0; j < e; ++j)
                    out[j] = k.add(out[j],
                                   k.mul(coef, rt[(static_cast<std::size_t>(kk) * d + i) * e + j]));
            }
        }
    };
    auto decode_vec = [&](std::uint64_t idx, int m) {
        std::vector<FiniteField::Elem> v(m);
        for (int t = 0; t < m; ++t) {
            v[t] = static_cast<FiniteField::Elem>(idx % k.q());
            idx /= k.q();
        }
        return v;
    };
    auto encode_vec = [&](const std::vector<FiniteField::Elem>& v) {
        std::uint64_t idx = 0, place = 1;
        for (FiniteField::Elem c : v) {
            idx += c * place;
            place *= k.q();
        }
        return idx;
    };

    switch (mode) {
        case OrbitMode::formula: {
            Rat v = ask(rep, q, budget, threads).to_rational() * rat_pow(q.q, e);
            return exact_integer(v, "q^e ask(theta)");
        }
        case OrbitMode::bfs: {
            std::uint64_t space = checked_pow(q.q, d + e, budget.points, "orbit enumeration");
            std::uint64_t qe = 1;
            for (int t = 0; t < e; ++t) qe *= q.q;
            UnionFind uf(space);
            std::vector<std::uint64_t> gens = additive_generators(k, l);
            std::vector<FiniteField::Elem> w;
            std::uint64_t qd = space / std::max<std::uint64_t>(qe, 1);
            if (e == 0) qd = space;
            for (std::uint64_t xcode = 0; xcode < qd; ++xcode) {
                auto x = decode_vec(xcode, d);
                for (std::uint64_t gen : gens) {
                    star(x, decode_vec(gen, l), w);
                    std::uint64_t wcode = encode_vec(w);
                    if (wcode == 0) continue;  // generator fixes this x-slice
                    for (std::uint64_t ycode = 0; ycode < qe; ++ycode) {
                        auto y = decode_vec(ycode, e);
                        for (int j = 0; j < e; ++j) y[j] = k.add(y[j], w[j]);
                        uf.unite(xcode * qe + ycode, xcode * qe + encode_vec(y));
                    }
                }
            }
            return Int(static_cast<unsigned long>(uf.components()));
        }
        case OrbitMode::burnside: {
            checked_pow(q.q, l + d + e, budget.points, "burnside enumeration");
            std::uint64_t qe = 1;
            for (int t = 0; t < e; ++t) qe *= q.q;
            EnumeratedAction action;
            action.space_size = checked_pow(q.q, d + e, budget.points, "burnside space");
            action.group_size = checked_pow(q.q, l, budget.points, "burnside group");
            action.group_id = 0;
            action.act = [&, qe](std::uint64_t xy, std::uint64_t a) {
                std::uint64_t xcode = xy / std::max<std::uint64_t>(qe, 1);
                std::uint64_t ycode = qe ? xy % qe : 0;
                if (e == 0) {
                    xcode = xy;
                    ycode = 0;
                }
                auto x = decode_vec(xcode, d);
                auto y = decode_vec(ycode, e);
                std::vector<FiniteField::Elem> w;
                star(x, decode_vec(a, l), w);
                for (int j = 0; j < e; ++j) y[j] = k.add(y[j], w[j]);
                return xcode * std::max<std::uint64_t>(qe, 1) + encode_vec(y);
            };
            action.gmul = [&](std::uint64_t a, std::uint64_t b) {
                auto va = decode_vec(a, l), vb = decode_vec(b, l);
                for (int t = 0; t < l; ++t) va[t] = k.add(va[t], vb[t]);
                return encode_vec(va);
            };
            Budget pair_budget = budget;  // the pair count is the budgeted unit
            return burnside_orbits(action, pair_budget);
        }
    }
    throw std::logic_error("unknown orbit mode");
}

Int natural_orbit_count(const MatrixGroup& g, const Budget& budget) {
    const FiniteField& k = g.field();
    const int n = g.n();
    std::uint64_t space = checked_pow(k.q(), n, budget.points, "natural orbit enumeration");
    UnionFind uf(space);
    std::vector<FqMatrix> gens;
    for (std::uint64_t idx : g.generators()) gens.push_back(g.element(idx));
    std::vector<FiniteField::Elem> v(n);
    for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t c = code;
        for (int t = 0; t < n; ++t) {
            v[t] = static_cast<FiniteField::Elem>(c % k.q());
            c /= k.q();
        }
        for (const FqMatrix& m : gens) {
            std::vector<FiniteField::Elem> image = row_times_matrix(v, m);
            std::uint64_t icode = 0, place = 1;
            for (int t = 0; t < n; ++t) {
                icode += image[t] * place;
                place *= k.q();
            }
            uf.unite(code, icode);
        }
    }
    return Int(static_cast<unsigned long>(uf.components()));
}

LieStructure lie_validate(const LieData& lie) {
    const int n = lie.n, r = static_cast<int>(lie.basis.size());
    for (int b = 0; b < r; ++b) {
        const IntMatrix& m = lie.basis[b];
        if (m.rows() != n || m.cols() != n)
            throw ShapeMismatchError("basis matrix " + std::to_string(b) + " is not " +
                                     std::to_string(n) + "x" + std::to_string(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                if (m.at(i, j) != 0)
                    throw NotNilpotentShapeError("basis matrix " + std::to_string(b) +
                                                 " is not strictly upper triangular");
    }
    IntMatrix flat(r, n * n);
    for (int b = 0; b < r; ++b)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.at(b, i * n + j) = lie.basis[b].at(i, j);
    if (rational_rank(flat) != r)
        throw NotIndependentError("basis matrices are linearly dependent over Q");

    LieStructure st;
    st.dim = r;
    st.s.assign(static_cast<std::size_t>(r) * r * r, Int(0));
    for (int i = 0; i < r; ++i)
        for (int kk = i + 1; kk < r; ++kk) {
            IntMatrix bracket = lie.basis[i].mul(lie.basis[kk]);
            IntMatrix ba = lie.basis[kk].mul(lie.basis[i]);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) bracket.at(a, b) -= ba.at(a, b);
            // solve sum_j s_j b_j = bracket over Q
            std::vector<Rat> mat(static_cast<std::size_t>(n) * n * r), rhs(
                static_cast<std::size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    for (int j = 0; j < r; ++j)
                        mat[(static_cast<std::size_t>(a) * n + b) * r + j] =
                            Rat(lie.basis[j].at(a, b));
                    rhs[static_cast<std::size_t>(a) * n + b] = Rat(bracket.at(a, b));
                }
            auto sol = solve_rational(std::move(mat), std::move(rhs), n * n, r);
            if (!sol)
                throw NotClosedError("bracket of basis elements " + std::to_string(i) + "," +
                                     std::to_string(kk) + " leaves the span");
            for (int j = 0; j < r; ++j) {
                if ((*sol)[j].get_den() != 1)
                    throw NotClosedError("bracket of basis elements " + std::to_string(i) +
                                         "," + std::to_string(kk) +
                                         " has non-integral coordinates");
                st.s[(static_cast<std::size_t>(i) * r + kk) * r + j] = (*sol)[j].get_num();
                st.s[(static_cast<std::size_t>(kk) * r + i) * r + j] = -(*sol)[j].get_num();
            }
        }
    return st;
}

ModuleRep lie_inclusion_rep(const LieData& lie) {
    lie_validate(lie);
    const int n = lie.n, r = static_cast<int>(lie.basis.size());
    std::vector<Int> tensor(static_cast<std::size_t>(r) * n * n);
    ModuleRep rep(r, n, n, std::move(tensor));
    for (int kk = 0; kk < r; ++kk)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rep.c(kk, i, j) = lie.basis[kk].at(i, j);
    rep.set_name(lie.name.empty() ? "iota" : "iota(" + lie.name + ")");
    return rep;
}

ModuleRep lie_adjoint_rep(const LieData& lie) {
    LieStructure st = lie_validate(lie);
    const int r = st.dim;
    std::vector<Int> tensor(static_cast<std::size_t>(r) * r * r);
    ModuleRep rep(r, r, r, std::move(tensor));
    for (int kk = 0; kk < r; ++kk)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) rep.c(kk, i, j) = st.at(i, kk, j);
    rep.set_name(lie.name.empty() ? "ad" : "ad(" + lie.name + ")");
    return rep;
}

std::unique_ptr<MatrixGroup> lie_exp_group(const LieData& lie, PrimePower q,
                                           const Budget& budget) {
    LieStructure st = lie_validate(lie);
    const int n = lie.n, r = st.dim;
    if (q.p < static_cast<std::uint64_t>(n))
        throw CharTooSmallError("exp needs p >= n, got p=" + std::to_string(q.p) +
                                ", n=" + std::to_string(n));
    checked_pow(q.q, r, budget.points, "lie exp closure");
    auto field = get_field(q);
    const FiniteField& k = *field;

    std::vector<FiniteField::Elem> invfact(n);
    FiniteField::Elem fact = k.one();
    invfact[0] = k.one();
    for (int t = 1; t < n; ++t) {
        fact = k.mul(fact, k.from_int(static_cast<long>(t)));
        invfact[t] = k.inv(fact);
    }

    std::vector<FqMatrix> gens;
    for (int b = 0; b < r; ++b) {
        FqMatrix base(k, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) base.at(i, j) = k.from_int(lie.basis[b].at(i, j));
        for (std::uint64_t c = 1; c < k.q(); ++c) {
            FqMatrix scaled(k, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    scaled.at(i, j) = k.mul(static_cast<FiniteField::Elem>(c), base.at(i, j));
            FqMatrix acc = FqMatrix::identity(k, n), power = FqMatrix::identity(k, n);
            for (int t = 1; t < n; ++t) {
                power = power.mul(scaled);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        acc.at(i, j) = k.add(acc.at(i, j), k.mul(invfact[t], power.at(i, j)));
            }
            gens.push_back(acc);
        }
    }
    std::string label = "exp(" + (lie.name.empty() ? "g" : lie.name) +
                        ") q=" + std::to_string(q.q);
    auto g = MatrixGroup::closure(GroupTable::Kind::lie_exp, label, field, n, true, gens,
                                  budget);
    Int expected = int_pow(Int(static_cast<unsigned long>(q.q)), static_cast<unsigned long>(r));
    if (expected.fits_ulong_p()) g->expected_order = expected.get_ui();
    return g;
}

std::unique_ptr<MatrixGroup> unitriangular_group(int n, PrimePower q, const Budget& budget) {
    checked_pow(q.q, n * (n - 1) / 2, budget.points, "unitriangular closure");
    auto field = get_field(q);
    const FiniteField& k = *field;
    std::vector<FqMatrix> gens;
    for (int i = 0; i + 1 < n; ++i)
        for (std::uint64_t c = 1; c < k.q(); ++c) {
            FqMatrix m = FqMatrix::identity(k, n);
            m.at(i, i + 1) = static_cast<FiniteField::Elem>(c);
            gens.push_back(m);
        }
    auto g = MatrixGroup::closure(GroupTable::Kind::matrix_closure,
                                  "U_" + std::to_string(n) + "(F_" + std::to_string(q.q) + ")",
                                  field, n, true, gens, budget);
    Int expected = int_pow(Int(static_cast<unsigned long>(q.q)),
                           static_cast<unsigned long>(n * (n - 1) / 2));
    if (expected.fits_ulong_p()) g->expected_order = expected.get_ui();
    return g;
}

std::unique_ptr<MatrixGroup> general_linear_group(int n, PrimePower q, const Budget& budget) {
    auto field = get_field(q);
    const FiniteField& k = *field;
    std::vector<FqMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::uint64_t c = 1; c < k.q(); ++c) {
                FqMatrix m = FqMatrix::identity(k, n);
                m.at(i, j) = static_cast<FiniteField::Elem>(c);
                gens.push_back(m);
            }
        }
    for (std::uint64_t u = 2; u < k.q(); ++u) {
        FqMatrix m = FqMatrix::identity(k, n);
        m.at(0, 0) = static_cast<FiniteField::Elem>(u);
        gens.push_back(m);
    }
    Int expected = 1;
    Int qn = int_pow(Int(static_cast<unsigned long>(q.q)), static_cast<unsigned long>(n));
    for (int i = 0; i < n; ++i)
        expected *= qn - int_pow(Int(static_cast<unsigned long>(q.q)),
                                 static_cast<unsigned long>(i));
    if (expected > static_cast<unsigned long>(budget.closure_cap))
        throw BudgetExceededError("GL_" + std::to_string(n) + "(F_" + std::to_string(q.q) +
                                  ") has order " + expected.get_str() + ", above the cap");
    auto g = MatrixGroup::closure(GroupTable::Kind::matrix_closure,
                                  "GL_" + std::to_string(n) + "(F_" + std::to_string(q.q) + ")",
                                  field, n, false, gens, budget);
    if (expected.fits_ulong_p()) g->expected_order = expected.get_ui();
    return g;
}

}  // namespace asklab
