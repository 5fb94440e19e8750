#include "sp2lab/cli/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sp2lab::cli {

namespace {

constexpr std::size_t kTextRowLimit = 20;

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_real(v.get<double>());
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty()) s += ' ';
            s += scalar_text(e);
        }
        return s;
    }
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (v.is_object()) {
        for (const auto& [k, e] : v.items()) flatten(e, prefix.empty() ? k : prefix + "." + k, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, scalar_text(v));
    }
}

std::string render_csv(const Json& report) {
    std::ostringstream os;
    const Json& rows = report.at("rows");
    if (!rows.empty()) {
        std::vector<std::pair<std::string, std::string>> head;
        flatten(rows.front(), "", head);
        for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << csv_field(head[i].first);
        os << '\n';
        for (const auto& row : rows) {
            std::vector<std::pair<std::string, std::string>> cells;
            flatten(row, "", cells);
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i].second);
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(report.at("summary"), "", cells);
    os << "key,value\n";
    for (const auto& [k, v] : cells) os << csv_field(k) << ',' << csv_field(v) << '\n';
    return os.str();
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    os << kArtifactName << ' ' << report.at("command").get<std::string>() << ": "
       << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(report.at("summary"), "", cells);
    for (const auto& [k, v] : cells) os << "  " << k << ": " << v << '\n';
    const Json& rows = report.at("rows");
    if (!rows.empty() && rows.size() <= kTextRowLimit) {
        os << "  rows:\n";
        for (const auto& row : rows) {
            std::vector<std::pair<std::string, std::string>> row_cells;
            flatten(row, "", row_cells);
            os << "    -";
            for (const auto& [k, v] : row_cells) os << ' ' << k << '=' << v;
            os << '\n';
        }
    } else {
        os << "  rows: " << rows.size() << '\n';
    }
    const Json& failures = report.at("failures");
    os << "  failures: " << failures.size() << '\n';
    for (const auto& f : failures) {
        os << "    - " << (f.contains("check") ? f.at("check").get<std::string>() : std::string("failure"));
        if (f.contains("index")) os << " (index " << f.at("index").dump() << ")";
        os << '\n';
        if (f.contains("reproduce")) os << "      " << f.at("reproduce").get<std::string>() << '\n';
    }
    return os.str();
}

}  // namespace

std::string_view artifact_version() {
#ifdef SP2LAB_VERSION
    return SP2LAB_VERSION;
#else
    return "0.0.0";
#endif
}

std::string format_real(double x) {
    if (x == 0.0) return "0";  // also drops the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json element_json(const SpElement& x) {
    Json a = Json::array();
    for (double c : to_array(x)) a.push_back(c);
    return a;
}

std::string m_literal(const SpElement& x) {
    const auto a = to_array(x);
    std::string s;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (i > 1) s += ',';
        s += format_real(a[i]);
    }
    return s;
}

std::string classify_literal(const SpElement& x, const SpElement& y) {
    return std::string(kArtifactName) + " classify --x=" + m_literal(x) + " --y=" + m_literal(y);
}

Json plane_json(const SpElement& x, const SpElement& y) {
    Json j;
    j["x"] = element_json(x);
    j["y"] = element_json(y);
    j["reproduce"] = classify_literal(x, y);
    return j;
}

Json make_report(std::string_view command) {
    Json r;
    r["schema_version"] = kSchemaVersion;
    r["artifact"] = {{"name", kArtifactName}, {"version", artifact_version()}};
    r["command"] = command;
    r["config"] = Json::object();
    r["pass"] = false;
    r["summary"] = Json::object();
    r["rows"] = Json::array();
    r["failures"] = Json::array();
    return r;
}

Json without_timing(Json report) {
    report.erase("timing");
    return report;
}

std::string render(const Json& report, std::string_view format) {
    if (format == "json") return report.dump(2) + '\n';
    if (format == "csv") return render_csv(report);
    if (format == "text") return render_text(report);
    throw std::invalid_argument("unknown format: " + std::string(format));
}

}  // namespace sp2lab::cli
