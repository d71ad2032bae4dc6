#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "l1path/homotopy.hpp"
#include "l1path/iterative.hpp"

namespace l1path::cli {

enum class Field {
    Counter,
    Time,
    X,
    Misfit,
    Remainder,
    Penalty,
    Support,
    L1Norm,
    Discrepancy,
    SupportSize,
    FixedPointResidual,
};

const char* field_name(Field f);

/// Comma-separated field names; throws ParseError on unknown names.
std::vector<Field> parse_fields(const std::string& spec);

enum class Format { Csv, Jsonl };

/// The subset of a node or iterate every record field is derived from.
template <class T>
struct Snapshot {
    std::size_t counter;
    double time;
    const Vector<T>* x;
    const Vector<T>* misfit;
    const Vector<T>* remainder;
    T penalty;
};

template <class T>
Snapshot<T> snapshot(const PathNode<T>& n) {
    return {n.counter, n.elapsed, &n.x, &n.misfit, &n.remainder, n.lambda};
}

template <class T>
Snapshot<T> snapshot(const IterationState<T>& s) {
    return {s.counter, s.elapsed, &s.x, &s.misfit, &s.remainder, s.penalty};
}

inline nlohmann::ordered_json scalar_json(const Rational& v) { return v.to_string(); }
inline nlohmann::ordered_json scalar_json(double v) { return v; }

template <class T>
nlohmann::ordered_json vector_json(const Vector<T>& v) {
    auto out = nlohmann::ordered_json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
    return out;
}

template <class T>
nlohmann::ordered_json field_value(Field f, const Snapshot<T>& s, const Vector<T>& w) {
    switch (f) {
    case Field::Counter: return s.counter;
    case Field::Time: return s.time;
    case Field::X: return vector_json(*s.x);
    case Field::Misfit: return vector_json(*s.misfit);
    case Field::Remainder: return vector_json(*s.remainder);
    case Field::Penalty: return scalar_json(s.penalty);
    case Field::Support: {
        auto out = nlohmann::ordered_json::array();
        for (Index i : support_of(*s.x)) out.push_back(i + 1);
        return out;
    }
    case Field::L1Norm: return scalar_json(l1_norm(*s.x));
    case Field::Discrepancy: return scalar_json(discrepancy(*s.misfit));
    case Field::SupportSize: return support_of(*s.x).size();
    case Field::FixedPointResidual: return fixed_point_residual(*s.x, *s.remainder, w, s.penalty);
    }
    return nullptr;
}

template <class T>
nlohmann::ordered_json record_json(const std::vector<Field>& fields, const Snapshot<T>& s, const Vector<T>& w) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (Field f : fields) out[field_name(f)] = field_value(f, s, w);
    return out;
}

/// Header line for CSV output, empty for JSON lines.
std::string header_line(const std::vector<Field>& fields, Format format);

/// One CSV row or one JSON line, newline-terminated. Rational scalars are
/// plain `p/q` cells in CSV and strings in JSON; vector fields are one
/// JSON-encoded CSV cell.
std::string format_record(const std::vector<Field>& fields, const nlohmann::ordered_json& record, Format format);

} // namespace l1path::cli
