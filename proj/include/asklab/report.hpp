#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asklab/fields.hpp"

#include <json.hpp>

namespace asklab {

// One verified identity instance. Values are exact: "num" with den_exp k
// means num / q^k for the q named in params; a value whose denominator is not
// a q-power is recorded verbatim as "a/b" with den_exp 0.
struct CheckRecord {
    std::string check;
    std::string params;
    std::string lhs = "0";
    int lhs_den_exp = 0;
    std::string rhs = "0";
    int rhs_den_exp = 0;
    std::optional<long> congruence_exp;
    bool pass = false;
    double runtime_s = 0.0;

    void set_lhs(const Rat& v, std::uint64_t q);
    void set_rhs(const Rat& v, std::uint64_t q);
    void set_lhs(const Int& v) { lhs = v.get_str(), lhs_den_exp = 0; }
    void set_rhs(const Int& v) { rhs = v.get_str(), rhs_den_exp = 0; }
};

struct FieldMeta {
    PrimePower q;
    std::vector<std::uint32_t> modulus;
};

struct VerificationReport {
    static constexpr int schema_version = 1;

    std::vector<CheckRecord> rows;
    std::vector<FieldMeta> fields;  // presentation of every field involved

    bool all_pass() const;
    std::size_t failure_count() const;
    void note_field(PrimePower q);
    void merge(VerificationReport other);
    // stable report order: by check name, then parameters
    void sort_rows();

    std::string to_csv() const;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

}  // namespace asklab
