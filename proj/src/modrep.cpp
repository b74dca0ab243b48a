#include "asklab/modrep.hpp"

#include <thread>

#include "asklab/fq_matrix.hpp"

namespace asklab {

ModuleRep::ModuleRep(int l, int d, int e, std::vector<Int> tensor, std::string name)
    : l_(l), d_(d), e_(e), tensor_(std::move(tensor)), name_(std::move(name)) {
    if (l < 0 || d < 0 || e < 0)
        throw ShapeMismatchError("negative rank in module representation");
    std::size_t want = static_cast<std::size_t>(l) * d * e;
    if (tensor_.size() != want)
        throw ShapeMismatchError("tensor has " + std::to_string(tensor_.size()) +
                                 " entries, expected " + std::to_string(want));
}

ModuleRep mth_power(const ModuleRep& rep, int m) {
    if (m < 1) throw InvalidInputError("power m must be >= 1");
    const int l = rep.l(), d = rep.d(), e = rep.e();
    ModuleRep r(l, m * d, m * e,
                std::vector<Int>(static_cast<std::size_t>(l) * m * d * m * e));
    for (int k = 0; k < l; ++k)
        for (int b = 0; b < m; ++b)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < e; ++j)
                    r.c(k, b * d + i, b * e + j) = rep.c(k, i, j);
    if (!rep.name().empty()) r.set_name(std::to_string(m) + "^" + rep.name());
    return r;
}

ModuleRep knuth_dual(const ModuleRep& rep) {
    const int l = rep.l(), d = rep.d(), e = rep.e();
    ModuleRep r(e, d, l, std::vector<Int>(static_cast<std::size_t>(e) * d * l));
    for (int k = 0; k < l; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < e; ++j) r.c(j, i, k) = rep.c(k, i, j);
    if (!rep.name().empty()) r.set_name(rep.name() + "*");
    return r;
}

ModuleRep alternating_hull(const ModuleRep& rep) {
    const int l = rep.l(), d = rep.d(), e = rep.e();
    const int n = d + l;
    ModuleRep r(n, n, e, std::vector<Int>(static_cast<std::size_t>(n) * n * e));
    for (int k = 0; k < l; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < e; ++j) {
                r.c(d + k, i, j) = rep.c(k, i, j);
                r.c(i, d + k, j) = -rep.c(k, i, j);
            }
    if (!rep.name().empty()) r.set_name("hull(" + rep.name() + ")");
    return r;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    const int l = a.l() + b.l(), d = a.d() + b.d(), e = a.e() + b.e();
    ModuleRep r(l, d, e, std::vector<Int>(static_cast<std::size_t>(l) * d * e));
    for (int k = 0; k < a.l(); ++k)
        for (int i = 0; i < a.d(); ++i)
            for (int j = 0; j < a.e(); ++j) r.c(k, i, j) = a.c(k, i, j);
    for (int k = 0; k < b.l(); ++k)
        for (int i = 0; i < b.d(); ++i)
            for (int j = 0; j < b.e(); ++j)
                r.c(a.l() + k, a.d() + i, a.e() + j) = b.c(k, i, j);
    if (!a.name().empty() && !b.name().empty()) r.set_name(a.name() + "+" + b.name());
    return r;
}

bool is_alternating(const ModuleRep& rep) {
    if (rep.l() != rep.d()) return false;
    for (int k = 0; k < rep.l(); ++k)
        for (int i = 0; i < rep.d(); ++i)
            for (int j = 0; j < rep.e(); ++j) {
                if (i == k && rep.c(k, k, j) != 0) return false;
                if (rep.c(k, i, j) != -rep.c(i, k, j)) return false;
            }
    return true;
}

IntMatrix flatten(const ModuleRep& rep) {
    IntMatrix m(rep.l(), rep.d() * rep.e());
    for (int k = 0; k < rep.l(); ++k)
        for (int i = 0; i < rep.d(); ++i)
            for (int j = 0; j < rep.e(); ++j) m.at(k, i * rep.e() + j) = rep.c(k, i, j);
    return m;
}

bool is_immersive(const ModuleRep& rep) {
    std::vector<Int> inv = smith_invariants(flatten(rep));
    if (static_cast<int>(inv.size()) != rep.l()) return false;
    for (const Int& d : inv)
        if (d != 1) return false;
    return true;
}

SaturateResult saturate(const ModuleRep& rep) {
    SaturationResult sat = saturation_basis(flatten(rep));
    const int r = sat.basis.rows();
    ModuleRep out(r, rep.d(), rep.e(),
                  std::vector<Int>(static_cast<std::size_t>(r) * rep.d() * rep.e()));
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < rep.d(); ++i)
            for (int j = 0; j < rep.e(); ++j) out.c(k, i, j) = sat.basis.at(k, i * rep.e() + j);
    if (!rep.name().empty()) out.set_name("sat(" + rep.name() + ")");
    return {std::move(out), sat.index};
}

Rat AskValue::to_rational() const {
    Rat r(num, int_pow(Int(static_cast<unsigned long>(q.q)),
                       static_cast<unsigned long>(den_exp)));
    r.canonicalize();
    return r;
}

bool AskValue::operator==(const AskValue& rhs) const {
    if (q.q != rhs.q.q) return false;
    Int lq = int_pow(Int(static_cast<unsigned long>(q.q)),
                     static_cast<unsigned long>(rhs.den_exp));
    Int rq = int_pow(Int(static_cast<unsigned long>(q.q)),
                     static_cast<unsigned long>(den_exp));
    return num * lq == rhs.num * rq;
}

std::string AskValue::str() const {
    if (den_exp == 0) return num.get_str();
    return num.get_str() + "/" + std::to_string(q.q) + "^" + std::to_string(den_exp);
}

std::uint64_t RankHistogram::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : counts) t += c;
    return t;
}

namespace {

// Walks a in F_q^l in code order, maintaining the matrix a*theta through a
// stack of partial sums over the trailing digits; visit() receives a scratch
// copy it may clobber.
class PointEnumerator {
   public:
    PointEnumerator(const ModuleRep& rep, const FiniteField& field)
        : field_(field), l_(rep.l()), d_(rep.d()), e_(rep.e()),
          slice_(static_cast<std::size_t>(d_) * e_) {
        reduced_.resize(static_cast<std::size_t>(l_) * slice_);
        for (int k = 0; k < l_; ++k)
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < e_; ++j)
                    reduced_[k * slice_ + static_cast<std::size_t>(i) * e_ + j] =
                        field_.from_int(rep.c(k, i, j));
        partial_.assign(static_cast<std::size_t>(l_ + 1) * slice_, 0);
        digits_.assign(l_, 0);
        scratch_.resize(slice_);
    }

    // Applies fn(matrix_scratch) for every point index in [begin, end).
    template <typename Fn>
    void run(std::uint64_t begin, std::uint64_t end, Fn&& fn) {
        if (begin >= end) return;
        seek(begin);
        for (std::uint64_t idx = begin;;) {
            std::copy(partial_.begin(), partial_.begin() + slice_, scratch_.begin());
            fn(scratch_.data());
            if (++idx == end) break;
            advance();
        }
    }

    int rows() const { return d_; }
    int cols() const { return e_; }

   private:
    void seek(std::uint64_t idx) {
        std::uint64_t v = idx;
        for (int t = 0; t < l_; ++t) {
            digits_[t] = static_cast<FiniteField::Elem>(v % field_.q());
            v /= field_.q();
        }
        for (int t = l_ - 1; t >= 0; --t) rebuild_level(t);
    }

    void advance() {
        int t = 0;
        while (true) {
            digits_[t] = static_cast<FiniteField::Elem>((digits_[t] + 1) % field_.q());
            if (digits_[t] != 0) break;
            ++t;
        }
        for (int s = t; s >= 0; --s) rebuild_level(s);
    }

    // partial[t] = partial[t+1] + digits[t] * slice_t ; lower digits are zero
    // whenever this is invoked above level 0.
    void rebuild_level(int t) {
        const FiniteField::Elem a = digits_[t];
        const FiniteField::Elem* up = partial_.data() + (t + 1) * slice_;
        FiniteField::Elem* cur = partial_.data() + t * slice_;
        if (a == 0) {
            std::copy(up, up + slice_, cur);
            return;
        }
        const FiniteField::Elem* sl = reduced_.data() + static_cast<std::size_t>(t) * slice_;
        for (std::size_t s = 0; s < slice_; ++s)
            cur[s] = field_.add(up[s], field_.mul(a, sl[s]));
    }

    const FiniteField& field_;
    int l_, d_, e_;
    std::size_t slice_;
    std::vector<FiniteField::Elem> reduced_;
    std::vector<FiniteField::Elem> partial_;
    std::vector<FiniteField::Elem> digits_;
    std::vector<FiniteField::Elem> scratch_;
};

std::uint64_t checked_point_count(const ModuleRep& rep, PrimePower q, const Budget& budget,
                                  const char* what) {
    Int total = int_pow(Int(static_cast<unsigned long>(q.q)),
                        static_cast<unsigned long>(rep.l()));
    if (total > static_cast<unsigned long>(budget.points))
        throw BudgetExceededError(std::string(what) + " needs " + total.get_str() +
                                  " points, budget is " + std::to_string(budget.points));
    return total.get_ui();
}

}  // namespace

RankHistogram rank_histogram(const ModuleRep& rep, PrimePower q, const Budget& budget,
                             unsigned threads) {
    std::uint64_t total = checked_point_count(rep, q, budget, "rank_histogram");
    auto field = get_field(q);
    const int bins = std::min(rep.d(), rep.e()) + 1;
    RankHistogram h{q, rep.l(), rep.d(), rep.e(),
                    std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0)};

    unsigned nthreads = std::max(1u, threads);
    if (static_cast<std::uint64_t>(nthreads) > total) nthreads = static_cast<unsigned>(total);
    std::vector<std::vector<std::uint64_t>> parts(
        nthreads, std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0));

    auto work = [&](unsigned who, std::uint64_t begin, std::uint64_t end) {
        PointEnumerator en(rep, *field);
        auto& mine = parts[who];
        en.run(begin, end, [&](FiniteField::Elem* mat) {
            mine[fq_rank_in_place(mat, rep.d(), rep.e(), *field)]++;
        });
    };

    if (nthreads <= 1) {
        work(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / nthreads, at = 0;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::uint64_t end = (t + 1 == nthreads) ? total : at + chunk;
            pool.emplace_back(work, t, at, end);
            at = end;
        }
        for (auto& th : pool) th.join();
    }
    for (auto& part : parts)
        for (int i = 0; i < bins; ++i) h.counts[i] += part[i];
    return h;
}

AskValue ask_from_histogram(const RankHistogram& h, int m) {
    if (m < 1) throw InvalidInputError("power m must be >= 1");
    Int num = 0;
    Int qz(static_cast<unsigned long>(h.q.q));
    for (int i = 0; i < static_cast<int>(h.counts.size()); ++i) {
        if (h.counts[i] == 0) continue;
        unsigned long exp = static_cast<unsigned long>(m) * static_cast<unsigned long>(h.d - i);
        num += Int(static_cast<unsigned long>(h.counts[i])) * int_pow(qz, exp);
    }
    return AskValue{h.q, num, h.l};
}

AskValue ask(const ModuleRep& rep, PrimePower q, const Budget& budget, unsigned threads) {
    return ask_from_histogram(rank_histogram(rep, q, budget, threads), 1);
}

AskValue ask_naive(const ModuleRep& rep, PrimePower q, const Budget& budget,
                   unsigned threads) {
    std::uint64_t total = checked_point_count(rep, q, budget, "ask_naive");
    auto field = get_field(q);
    Int qz(static_cast<unsigned long>(q.q));
    std::vector<Int> powers(rep.d() + 1);
    for (int i = 0; i <= rep.d(); ++i) powers[i] = int_pow(qz, static_cast<unsigned long>(i));

    unsigned nthreads = std::max(1u, threads);
    if (static_cast<std::uint64_t>(nthreads) > total) nthreads = static_cast<unsigned>(total);
    std::vector<Int> parts(nthreads, Int(0));
    auto work = [&](unsigned who, std::uint64_t begin, std::uint64_t end) {
        PointEnumerator en(rep, *field);
        Int acc = 0;
        en.run(begin, end, [&](FiniteField::Elem* mat) {
            acc += powers[rep.d() - fq_rank_in_place(mat, rep.d(), rep.e(), *field)];
        });
        parts[who] = acc;
    };
    if (nthreads <= 1) {
        work(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = total / nthreads, at = 0;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::uint64_t end = (t + 1 == nthreads) ? total : at + chunk;
            pool.emplace_back(work, t, at, end);
            at = end;
        }
        for (auto& th : pool) th.join();
    }
    Int num = 0;
    for (const Int& p : parts) num += p;
    return AskValue{q, num, rep.l()};
}

Int vmax_count(const ModuleRep& rep, PrimePower q, const Budget& budget, unsigned threads) {
    RankHistogram h = rank_histogram(rep, q, budget, threads);
    if (rep.d() >= static_cast<int>(h.counts.size())) return 0;
    return Int(static_cast<unsigned long>(h.counts[rep.d()]));
}

}  // namespace asklab
