#include "asklab/report.hpp"

#include <algorithm>
#include <sstream>

namespace asklab {

namespace {

// Splits an exact rational into (num, den_exp) relative to q when possible.
std::pair<std::string, int> value_parts(const Rat& v, std::uint64_t q) {
    Int den(v.get_den());
    auto exp = q_power_exponent(den, Int(static_cast<unsigned long>(q)));
    if (exp) return {Int(v.get_num()).get_str(), static_cast<int>(*exp)};
    return {v.get_str(), 0};
}

}  // namespace

void CheckRecord::set_lhs(const Rat& v, std::uint64_t q) {
    std::tie(lhs, lhs_den_exp) = value_parts(v, q);
}

void CheckRecord::set_rhs(const Rat& v, std::uint64_t q) {
    std::tie(rhs, rhs_den_exp) = value_parts(v, q);
}

bool VerificationReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t VerificationReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const CheckRecord& r) { return !r.pass; }));
}

void VerificationReport::note_field(PrimePower q) {
    for (const FieldMeta& f : fields)
        if (f.q.q == q.q) return;
    fields.push_back({q, get_field(q)->modulus()});
}

void VerificationReport::merge(VerificationReport other) {
    for (auto& r : other.rows) rows.push_back(std::move(r));
    for (auto& f : other.fields) {
        bool have = false;
        for (const FieldMeta& mine : fields)
            if (mine.q.q == f.q.q) have = true;
        if (!have) fields.push_back(std::move(f));
    }
}

void VerificationReport::sort_rows() {
    std::stable_sort(rows.begin(), rows.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.params < b.params;
    });
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "check,params,lhs_num,lhs_den_exp,rhs_num,rhs_den_exp,congruence_exp,pass\n";
    for (const CheckRecord& r : rows) {
        std::string params = r.params;
        std::replace(params.begin(), params.end(), ',', ';');
        out << r.check << "," << params << "," << r.lhs << "," << r.lhs_den_exp << ","
            << r.rhs << "," << r.rhs_den_exp << ","
            << (r.congruence_exp ? std::to_string(*r.congruence_exp) : "") << ","
            << (r.pass ? "1" : "0") << "\n";
    }
    return out.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["all_pass"] = all_pass();
    j["fields"] = nlohmann::json::array();
    for (const FieldMeta& f : fields)
        j["fields"].push_back({{"q", f.q.q}, {"p", f.q.p}, {"f", f.q.f}, {"modulus", f.modulus}});
    j["checks"] = nlohmann::json::array();
    for (const CheckRecord& r : rows) {
        nlohmann::json row{{"check", r.check},       {"params", r.params},
                           {"lhs_num", r.lhs},       {"lhs_den_exp", r.lhs_den_exp},
                           {"rhs_num", r.rhs},       {"rhs_den_exp", r.rhs_den_exp},
                           {"pass", r.pass},         {"runtime_s", r.runtime_s}};
        if (r.congruence_exp) row["congruence_exp"] = *r.congruence_exp;
        j["checks"].push_back(std::move(row));
    }
    return j;
}

std::string VerificationReport::to_table() const {
    std::size_t wcheck = 5, wparams = 6;
    for (const CheckRecord& r : rows) {
        wcheck = std::max(wcheck, r.check.size());
        wparams = std::max(wparams, r.params.size());
    }
    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    out << pad("check", wcheck) << "  " << pad("params", wparams)
        << "  result  lhs = rhs\n";
    for (const CheckRecord& r : rows) {
        std::string lhs = r.lhs + (r.lhs_den_exp ? "/q^" + std::to_string(r.lhs_den_exp) : "");
        std::string rhs = r.rhs + (r.rhs_den_exp ? "/q^" + std::to_string(r.rhs_den_exp) : "");
        out << pad(r.check, wcheck) << "  " << pad(r.params, wparams) << "  "
            << (r.pass ? "PASS  " : "FAIL  ") << "  " << lhs << " = " << rhs;
        if (r.congruence_exp) out << "  (val " << *r.congruence_exp << ")";
        out << "\n";
    }
    out << rows.size() << " checks, " << failure_count() << " failures\n";
    return out.str();
}

}  // namespace asklab
