#include "ucaris/records.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

namespace ucaris {

const FieldValue* SimRecord::find(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key) return &v;
    return nullptr;
}

double SimRecord::number(const std::string& key) const {
    const FieldValue* v = find(key);
    if (!v) throw std::runtime_error("record: missing field " + key);
    if (const double* d = std::get_if<double>(v)) return *d;
    if (const std::int64_t* i = std::get_if<std::int64_t>(v)) return static_cast<double>(*i);
    throw std::runtime_error("record: field " + key + " is not numeric");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';  // doubled per RFC 4180
        out += c;
    }
    out += "\"";
    return out;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

std::string value_text(const FieldValue& v, bool json) {
    if (const double* d = std::get_if<double>(&v)) return format_double(*d);
    if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    const std::string& s = std::get<std::string>(v);
    return json ? json_quote(s) : csv_quote(s);
}

void write_csv(const RecordSet& rs, std::ostream& out) {
    for (size_t i = 0; i < rs.columns.size(); ++i)
        out << (i ? "," : "") << csv_quote(rs.columns[i]);
    out << "\n";
    for (const auto& rec : rs.records) {
        for (size_t i = 0; i < rs.columns.size(); ++i) {
            if (i) out << ",";
            if (const FieldValue* v = rec.find(rs.columns[i])) out << value_text(*v, false);
        }
        out << "\n";
    }
}

void write_json(const RecordSet& rs, std::ostream& out) {
    out << "[";
    for (size_t r = 0; r < rs.records.size(); ++r) {
        out << (r ? ",\n " : "\n ") << "{";
        bool first = true;
        for (const auto& col : rs.columns) {
            if (const FieldValue* v = rs.records[r].find(col)) {
                out << (first ? "" : ", ") << json_quote(col) << ": " << value_text(*v, true);
                first = false;
            }
        }
        out << "}";
    }
    out << (rs.records.empty() ? "]" : "\n]") << "\n";
}

}  // namespace

void emit(const RecordSet& records, EmitFormat format, const std::string& path) {
    const auto write = [&](std::ostream& out) {
        if (format == EmitFormat::Csv)
            write_csv(records, out);
        else
            write_json(records, out);
        if (!out) throw std::runtime_error("emit: write failed for " + path);
    };
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot open " + path + " for writing");
    write(out);
}

}  // namespace ucaris
