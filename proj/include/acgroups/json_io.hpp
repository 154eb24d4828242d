#pragma once

// JSON serialization with stable schemas. Coefficients are decimal strings,
// words use the text grammar, matrices carry a ring tag:
//   "groupring(r,s)"  entries over ZF_{r+s}
//   "laurent(n)"      entries over an n-variable Laurent ring
//   "laurent-t"       entries over ZZ[t, t^-1]

#include <string>
#include <vector>

#include <json.hpp>

#include "acgroups/group_ring.hpp"
#include "acgroups/laurent.hpp"
#include "acgroups/matrix.hpp"
#include "acgroups/relations.hpp"
#include "acgroups/search.hpp"

namespace acgroups {

using Json = nlohmann::json;

inline Json groupRingToJson(const GroupRingElement& e) {
    Json arr = Json::array();
    for (const auto& [w, c] : e.terms())
        arr.push_back(Json{{"word", formatWord(w)}, {"coeff", c.toString()}});
    return arr;
}

inline GroupRingElement groupRingFromJson(const Json& j, const Alphabet& alphabet) {
    GroupRingElement e = GroupRingElement::zero(alphabet);
    for (const Json& term : j)
        e.addTerm(parseWord(term.at("word").get<std::string>(), alphabet),
                  Integer::fromString(term.at("coeff").get<std::string>()));
    return e;
}

inline Json laurentToJson(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [exps, c] : p.terms())
        arr.push_back(Json{{"exponents", exps}, {"coeff", c.toString()}});
    return arr;
}

inline LaurentPoly laurentFromJson(const Json& j, int vars) {
    LaurentPoly p = LaurentPoly::zero(vars);
    for (const Json& term : j)
        p.addTerm(term.at("exponents").get<std::vector<int>>(),
                  Integer::fromString(term.at("coeff").get<std::string>()));
    return p;
}

inline std::string groupRingTag(const Alphabet& alphabet) {
    return "groupring(" + std::to_string(alphabet.xCount) + "," +
           std::to_string(alphabet.yCount) + ")";
}

inline std::string laurentTag(int vars) {
    return vars == 1 ? "laurent-t" : "laurent(" + std::to_string(vars) + ")";
}

inline Json matrixToJson(const Matrix<GroupRingElement>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(groupRingToJson(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"ring", groupRingTag(m.at(0, 0).alphabet())}, {"rows", rows}};
}

inline Json matrixToJson(const Matrix<LaurentPoly>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(laurentToJson(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"ring", laurentTag(m.at(0, 0).vars())}, {"rows", rows}};
}

namespace detail {

inline std::pair<int, int> parseRingPair(const std::string& tag, const std::string& prefix) {
    std::size_t open = prefix.size();
    std::size_t comma = tag.find(',', open);
    std::size_t close = tag.find(')', open);
    if (comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad ring tag: " + tag);
    return {std::stoi(tag.substr(open, comma - open)),
            std::stoi(tag.substr(comma + 1, close - comma - 1))};
}

}  // namespace detail

inline Matrix<GroupRingElement> groupRingMatrixFromJson(const Json& j) {
    std::string tag = j.at("ring").get<std::string>();
    if (tag.rfind("groupring(", 0) != 0)
        throw std::invalid_argument("expected a groupring matrix, got " + tag);
    auto [r, s] = detail::parseRingPair(tag, "groupring(");
    Alphabet alphabet{r, s};
    const Json& rows = j.at("rows");
    int n = static_cast<int>(rows.size());
    Matrix<GroupRingElement> m(n, GroupRingElement::zero(alphabet));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) = groupRingFromJson(rows.at(i).at(k), alphabet);
    return m;
}

inline Matrix<LaurentPoly> laurentMatrixFromJson(const Json& j) {
    std::string tag = j.at("ring").get<std::string>();
    int vars;
    if (tag == "laurent-t") {
        vars = 1;
    } else if (tag.rfind("laurent(", 0) == 0) {
        vars = std::stoi(tag.substr(8, tag.size() - 9));
    } else {
        throw std::invalid_argument("expected a laurent matrix, got " + tag);
    }
    const Json& rows = j.at("rows");
    int n = static_cast<int>(rows.size());
    Matrix<LaurentPoly> m(n, LaurentPoly::zero(vars));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m.at(i, k) = laurentFromJson(rows.at(i).at(k), vars);
    return m;
}

inline Json relationReportToJson(const RelationReport& r) {
    Json j{{"family", r.family}, {"instance", r.instance}, {"holds", r.holds}};
    if (r.actionIdentity) j["actionIdentity"] = *r.actionIdentity;
    if (r.nuIdentity) j["nuIdentity"] = *r.nuIdentity;
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline const char* searchStatusName(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::BudgetHit: return "budget-hit";
    }
    return "unknown";
}

inline Json searchResultToJson(const SearchResult& r) {
    Json j{{"status", searchStatusName(r.status)},
           {"stats",
            {{"nodesExpanded", r.stats.nodesExpanded},
             {"frontierPeak", r.stats.frontierPeak},
             {"elapsedSeconds", r.stats.elapsedSeconds}}}};
    if (r.status == SearchStatus::Found) {
        j["depth"] = r.depth;
        j["path"] = formatTransform(r.path);
    }
    return j;
}

inline Json classifyReportToJson(const ClassifyReport& r) {
    Json items = Json::array();
    for (const ClassifyItem& item : r.attempted)
        items.push_back(Json{{"pair", formatWordTuple({item.state.first, item.state.second})},
                             {"det", item.det},
                             {"status", searchStatusName(item.status)},
                             {"depth", item.depth}});
    return Json{{"maxTotalLength", r.maxTotalLength},
                {"canonicalPairs", r.canonicalPairs},
                {"determinantExcluded", r.determinantExcluded},
                {"attempted", items},
                {"trivialized", r.trivialized},
                {"unresolved", r.unresolved}};
}

}  // namespace acgroups
