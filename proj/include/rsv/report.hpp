// SPDX-License-Identifier: Apache-2.0
#ifndef RSV_REPORT_HPP
#define RSV_REPORT_HPP

#include <string>
#include <vector>

namespace rsv {

/// Deterministic JSON builder: insertion order is emission order and every
/// floating-point value is rendered with 17 significant digits, so equal
/// inputs produce byte-identical documents.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

    static std::string format_double(double v);

private:
    void comma();

    std::string out_;
    std::vector<bool> need_comma_;
};

/// Fixed-header CSV with the same float rendering as the JSON writer.
class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    static std::string cell(double v);
    const std::string& str() const { return out_; }

private:
    std::string out_;
};

std::string json_escape(const std::string& s);

} // namespace rsv

#endif
