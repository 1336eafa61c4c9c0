#pragma once

#include <string>
#include <vector>

namespace qkforms {

inline constexpr const char* kVersion = "0.1.0";

/// One verification item.  `anchor` names the identity being checked in a
/// self-contained way; `residual` is "0" on success, otherwise a description
/// of the first nonzero difference found.
struct CheckRecord {
    std::string id;
    std::string anchor;
    bool pass = false;
    std::string residual;
    std::string note; // optional free-form remark (kept out of pass/fail logic)
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> records;
    /// Discrepancy flags: displayed statements the engine refuted and
    /// replaced by a certified corrected form.  Always surfaced in output;
    /// they do not flip the verdict, which covers the certified records.
    std::vector<std::string> flags;

    Report() = default;
    explicit Report(std::string s) : suite(std::move(s)) {}

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& r : records)
            if (!r.pass) ++k;
        return k;
    }

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void flag(std::string f) { flags.push_back(std::move(f)); }

    void merge(const Report& other) {
        for (const auto& r : other.records) records.push_back(r);
        for (const auto& f : other.flags) flags.push_back(f);
    }
};

} // namespace qkforms
