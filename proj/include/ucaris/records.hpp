#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ucaris {

using FieldValue = std::variant<double, std::int64_t, std::string, bool>;

/// One sweep-point result: ordered (key, value) pairs so that output column
/// order is deterministic.
struct SimRecord {
    std::vector<std::pair<std::string, FieldValue>> fields;

    SimRecord& add(const std::string& key, FieldValue value) {
        fields.emplace_back(key, std::move(value));
        return *this;
    }
    const FieldValue* find(const std::string& key) const;
    double number(const std::string& key) const;  // throws if missing / not numeric
};

struct RecordSet {
    std::vector<std::string> columns;  // fixed by the producing run
    std::vector<SimRecord> records;
};

enum class EmitFormat { Csv, Json };

/// Write the records to `path` ("-" = stdout). CSV quotes per RFC 4180; JSON
/// is an array of objects in column order. Doubles are printed with 17
/// significant digits so reruns are byte-identical.
void emit(const RecordSet& records, EmitFormat format, const std::string& path);

std::string format_double(double v);

}  // namespace ucaris
