#include "asklab/qseries.hpp"

#include <algorithm>
#include <set>

namespace asklab {

LaurentPoly::LaurentPoly(long min_exp, std::vector<Int> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) min_exp_ = 0;
}

LaurentPoly LaurentPoly::constant(Int c) { return LaurentPoly(0, {std::move(c)}); }

LaurentPoly LaurentPoly::monomial(Int c, long e) { return LaurentPoly(e, {std::move(c)}); }

Int LaurentPoly::coeff(long e) const {
    if (e < min_exp_ || e > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    long lo = std::min(min_exp_, rhs.min_exp_);
    long hi = std::max(max_exp(), rhs.max_exp());
    std::vector<Int> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = coeff(e) + rhs.coeff(e);
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return LaurentPoly(min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return LaurentPoly();
    std::vector<Int> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return LaurentPoly(min_exp_ + rhs.min_exp_, std::move(c));
}

Rat LaurentPoly::eval(PrimePower q) const {
    Rat acc(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc += Rat(coeffs_[i]) * rat_pow(q.q, min_exp_ + static_cast<long>(i));
    return acc;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        long e = min_exp_ + i;
        if (!out.empty()) out += (c > 0) ? " + " : " - ";
        else if (c < 0) out += "-";
        Int ac = abs(c);
        if (ac != 1 || e == 0) out += ac.get_str();
        if (e != 0) {
            if (ac != 1) out += "*";
            out += "X";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Rat eval_laurent(const LaurentPoly& f, PrimePower q) { return f.eval(q); }

Rat eval_sring(const SRingElem& s, PrimePower q) {
    Rat val = s.numerator.eval(q);
    for (long n : s.geom_factors) {
        Rat den = Rat(1) - rat_pow(q.q, n);
        val /= den;
    }
    return val;
}

QAdicTruncation::QAdicTruncation(long min_exp, long cutoff, std::vector<Int> coeffs)
    : min_exp_(min_exp), cutoff_(cutoff), coeffs_(std::move(coeffs)) {
    if (cutoff_ < min_exp_ + static_cast<long>(coeffs_.size()))
        throw InvalidInputError("q-adic truncation has coefficients beyond its cutoff");
    normalize();
}

void QAdicTruncation::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_exp_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) min_exp_ = cutoff_;
}

QAdicTruncation QAdicTruncation::zero(long cutoff) { return {cutoff, cutoff, {}}; }

QAdicTruncation QAdicTruncation::from_laurent(const LaurentPoly& f, long cutoff) {
    if (f.is_zero()) return zero(cutoff);
    std::vector<Int> c;
    long lo = f.min_exp();
    for (long e = lo; e < cutoff && e <= f.max_exp(); ++e) c.push_back(f.coeff(e));
    return {lo, cutoff, std::move(c)};
}

QAdicTruncation QAdicTruncation::geometric(long n, long cutoff) {
    if (n < 1) throw InvalidInputError("geometric factor must have n >= 1");
    std::vector<Int> c(static_cast<std::size_t>(std::max(0L, cutoff)), 0);
    for (long e = 0; e < cutoff; e += n) c[static_cast<std::size_t>(e)] = 1;
    if (cutoff <= 0) return zero(cutoff);
    return {0, cutoff, std::move(c)};
}

Int QAdicTruncation::coeff(long e) const {
    if (e < min_exp_ || e >= min_exp_ + static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

QAdicTruncation QAdicTruncation::operator+(const QAdicTruncation& rhs) const {
    long cutoff = std::min(cutoff_, rhs.cutoff_);
    long lo = std::min(min_exp_, rhs.min_exp_);
    if (lo >= cutoff) return zero(cutoff);
    std::vector<Int> c(static_cast<std::size_t>(cutoff - lo));
    for (long e = lo; e < cutoff; ++e)
        c[static_cast<std::size_t>(e - lo)] = coeff(e) + rhs.coeff(e);
    return {lo, cutoff, std::move(c)};
}

QAdicTruncation QAdicTruncation::operator*(const QAdicTruncation& rhs) const {
    long cutoff = std::min(cutoff_, rhs.cutoff_);
    long lo = min_exp_ + rhs.min_exp_;
    if (coeffs_.empty() || rhs.coeffs_.empty() || lo >= cutoff) return zero(cutoff);
    std::vector<Int> c(static_cast<std::size_t>(cutoff - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            long e = min_exp_ + static_cast<long>(i) + rhs.min_exp_ + static_cast<long>(j);
            if (e >= cutoff) break;
            c[static_cast<std::size_t>(e - lo)] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return {lo, cutoff, std::move(c)};
}

Rat QAdicTruncation::eval(PrimePower q) const {
    Rat acc(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc += Rat(coeffs_[i]) * rat_pow(q.q, min_exp_ + static_cast<long>(i));
    return acc;
}

std::string QAdicTruncation::str() const {
    std::string out = LaurentPoly(min_exp_, coeffs_).str();
    out += " + O(q^" + std::to_string(cutoff_) + ")";
    return out;
}

QAdicTruncation expand_sring(const SRingElem& s, long cutoff) {
    if (cutoff < 1) throw InvalidInputError("cutoff must be >= 1");
    QAdicTruncation acc = QAdicTruncation::from_laurent(s.numerator, cutoff);
    for (long n : s.geom_factors) acc = acc * QAdicTruncation::geometric(n, cutoff);
    return acc;
}

bool congruent_mod_qn(const Rat& x, const Rat& y, PrimePower q, long n) {
    if (n < 1) throw InvalidInputError("congruence level n must be >= 1");
    Int qz(static_cast<unsigned long>(q.q));
    for (const Rat* v : {&x, &y})
        if (!q_power_exponent(Int(v->get_den()), qz))
            throw BadDenominatorError("denominator " + v->get_den().get_str() +
                                      " is not a power of q=" + qz.get_str());
    Rat diff = x - y;
    if (diff == 0) return true;
    return rat_valuation(diff, q.q) >= n;
}

std::optional<LaurentPoly> laurent_fit(const std::vector<std::pair<PrimePower, Rat>>& samples,
                                       long lo, long hi) {
    if (hi < lo) throw InvalidInputError("empty exponent range");
    const int k = static_cast<int>(hi - lo + 1);
    if (static_cast<int>(samples.size()) < k + 1)
        throw InsufficientSamplesError("need at least " + std::to_string(k + 1) +
                                       " samples, got " + std::to_string(samples.size()));
    std::set<std::uint64_t> seen;
    for (const auto& [q, v] : samples)
        if (!seen.insert(q.q).second)
            throw InsufficientSamplesError("duplicate sample at q=" + std::to_string(q.q));

    const int rows = static_cast<int>(samples.size()) - 1;  // last sample held out
    std::vector<Rat> a(static_cast<std::size_t>(rows) * k), b(rows);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < k; ++j)
            a[static_cast<std::size_t>(i) * k + j] = rat_pow(samples[i].first.q, lo + j);
        b[i] = samples[i].second;
    }
    auto sol = solve_rational(std::move(a), std::move(b), rows, k);
    if (!sol) return std::nullopt;

    std::vector<Int> coeffs(k);
    for (int j = 0; j < k; ++j) {
        if ((*sol)[j].get_den() != 1) return std::nullopt;  // not in Z[X^{+-1}]
        coeffs[j] = (*sol)[j].get_num();
    }
    LaurentPoly fit(lo, std::move(coeffs));
    for (const auto& [q, v] : samples)
        if (fit.eval(q) != v) return std::nullopt;  // held-out (or any) sample fails
    return fit;
}

}  // namespace asklab
