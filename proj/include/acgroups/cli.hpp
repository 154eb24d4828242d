#pragma once

// Command-line entry point. Exit codes: 0 success/verified, 1 a verification
// check failed (or a search exhausted its space without trivializing),
// 2 parse/usage error, 3 budget exhausted.

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acgroups/fox.hpp"
#include "acgroups/json_io.hpp"
#include "acgroups/magnus.hpp"
#include "acgroups/moves.hpp"
#include "acgroups/relations.hpp"
#include "acgroups/search.hpp"
#include "acgroups/word.hpp"

namespace acgroups {

namespace climpl {

inline void bumpRank(int& rank, long long value) {
    if (value > rank) rank = static_cast<int>(value);
}

inline void scanGenRanks(std::string_view text, int& rx, int& ry) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'x' && text[i] != 'y') continue;
        std::size_t j = i + 1;
        long long value = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9' && value < 1000000) {
            value = value * 10 + (text[j] - '0');
            ++j;
        }
        if (j > i + 1) bumpRank(text[i] == 'x' ? rx : ry, value);
        i = j - 1;
    }
}

inline long long readInt(std::string_view text, std::size_t& pos) {
    long long value = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && value < 1000000) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
        any = true;
    }
    return any ? value : 0;
}

// estimate the ranks a move sequence needs, before the real (validated) parse
inline void scanTransformRanks(std::string_view text, int& rx, int& ry) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 2, "AC") == 0 && i + 2 < text.size() && text[i + 2] >= '1' &&
            text[i + 2] <= '4') {
            int kind = text[i + 2] - '0';
            std::size_t pos = i + 3;
            while (pos < text.size() && text[pos] != '(') ++pos;
            if (pos >= text.size()) break;
            ++pos;
            while (pos < text.size() && text[pos] == ' ') ++pos;
            bumpRank(rx, readInt(text, pos));
            if (kind == 1 || kind == 2 || kind == 4) {
                while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
                bumpRank(kind == 4 ? ry : rx, readInt(text, pos));
            }
            i = pos;
        } else if (text[i] == 'C' && (i == 0 || text[i - 1] != 'A')) {
            std::size_t pos = i + 1;
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos >= text.size() || text[pos] != '(') continue;
            ++pos;
            while (pos < text.size() && text[pos] == ' ') ++pos;
            bumpRank(rx, readInt(text, pos));
            std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) break;
            scanGenRanks(text.substr(pos, close - pos), rx, ry);
            i = close;
        } else if (text[i] == 'x' || text[i] == 'y') {
            std::size_t pos = i + 1;
            long long v = readInt(text, pos);
            if (v > 0) bumpRank(text[i] == 'x' ? rx : ry, v);
            i = pos - 1;
        }
    }
}

inline Gen parseGenToken(const std::string& token) {
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y'))
        throw ParseError("expected a generator like x2 or y1", 0);
    std::size_t pos = 1;
    long long index = detail::parseSignedInt(token, pos, "generator index");
    if (pos != token.size() || index < 1) throw ParseError("bad generator token", pos);
    return token[0] == 'x' ? xGen(static_cast<int>(index)) : yGen(static_cast<int>(index));
}

inline int countTupleEntries(std::string_view text) {
    int depth = 0;
    int entries = 1;
    bool sawParen = false;
    for (char c : text) {
        if (c == '(') {
            ++depth;
            sawParen = true;
        } else if (c == ')') {
            --depth;
        } else if (c == ',' && depth == 1) {
            ++entries;
        }
    }
    if (!sawParen) throw ParseError("expected a tuple like (x1, x2)", 0);
    return entries;
}

inline std::string formatLaurentMatrixText(const Matrix<LaurentPoly>& m,
                                           const std::vector<std::string>& names) {
    std::string out;
    for (int i = 0; i < m.size(); ++i) {
        out += "[ ";
        for (int j = 0; j < m.size(); ++j) {
            if (j > 0) out += " | ";
            out += formatLaurentPoly(m.at(i, j), names);
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace climpl

inline int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in Andrews-Curtis transformation groups"};
    app.name("acgroups");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string outputMode = "text";
    unsigned long long seed = 20240901ull;  // reserved for randomized subcommands
    app.add_option("--output", outputMode, "output mode")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for randomized operations");

    // fox
    auto* foxCmd = app.add_subcommand("fox", "Fox derivative of a word");
    std::string foxWrt, foxWord;
    int foxRx = 0, foxRy = 0;
    foxCmd->add_option("--wrt", foxWrt, "generator to derive by, e.g. x2")->required();
    foxCmd->add_option("--word", foxWord, "word in the grammar, e.g. \"x1 x2 x1^-1\"")->required();
    foxCmd->add_option("--rx", foxRx, "number of x-generators (default: inferred)");
    foxCmd->add_option("--ry", foxRy, "number of y-generators (default: inferred)");

    // jacobian
    auto* jacCmd = app.add_subcommand("jacobian", "Jacobi matrix of a transformation");
    std::string jacTransform;
    int jacRx = 0, jacRy = 0;
    jacCmd->add_option("--transform", jacTransform, "move sequence, e.g. \"AC1(1,2); AC3(2)\"")
        ->required();
    jacCmd->add_option("--rx", jacRx, "number of x-generators (default: inferred)");
    jacCmd->add_option("--ry", jacRy, "number of y-generators (default: inferred)");

    // nu
    auto* nuCmd = app.add_subcommand("nu", "projective 2x2 Laurent image of a transformation");
    std::string nuTransform;
    int nuKappa = 1, nuM = 0;
    nuCmd->add_option("--transform", nuTransform, "move sequence over rank 2")->required();
    nuCmd->add_option("--kappa", nuKappa, "surviving conjugator index (default 1)");
    nuCmd->add_option("--m", nuM, "number of conjugator generators (default: inferred)");

    // act
    auto* actCmd = app.add_subcommand("act", "apply a move sequence to a tuple");
    std::string actTransform, actTuple;
    actCmd->add_option("--transform", actTransform, "move sequence")->required();
    actCmd->add_option("--tuple", actTuple, "tuple, e.g. \"(x1, x2)\"")->required();

    // witness
    auto* witCmd = app.add_subcommand("witness", "separating witness tuple");
    int witM = 0, witR = 2, witS = 0;
    witCmd->add_option("--m", witM, "conjugation-move count")->required();
    witCmd->add_option("--r", witR, "rank (>= 2)")->required();
    witCmd->add_option("--s", witS, "number of y-generators (default 0)");

    // verify-relations
    auto* verCmd = app.add_subcommand("verify-relations", "verify a relation family");
    std::string verFamily;
    int verKMax = 1, verM = 1, verKappa = 1;
    verCmd->add_option("--family", verFamily, "q1 | q2 | commutator")
        ->required()
        ->check(CLI::IsMember({"q1", "q2", "commutator"}));
    verCmd->add_option("--k-max", verKMax, "largest k to check")->required();
    verCmd->add_option("--m", verM, "number of conjugators (commutator family)");
    verCmd->add_option("--kappa", verKappa, "conjugator index (commutator family)");

    // search
    auto* seaCmd = app.add_subcommand("search", "breadth-first trivialization search");
    std::string seaPair, seaCorpus, seaName;
    int seaMaxLen = 16, seaMaxDepth = -1;
    long long seaMaxNodes = 1000000;
    seaCmd->add_option("--pair", seaPair, "start pair, e.g. \"x1 x2 ; x2\"");
    seaCmd->add_option("--corpus", seaCorpus, "corpus file with lines 'name: w1 ; w2'");
    seaCmd->add_option("--name", seaName, "entry name inside the corpus file");
    seaCmd->add_option("--max-len", seaMaxLen, "total length cap (default 16)");
    seaCmd->add_option("--max-nodes", seaMaxNodes, "node budget (default 1000000)");
    seaCmd->add_option("--max-depth", seaMaxDepth, "depth cap (default: none)");

    // classify
    auto* claCmd = app.add_subcommand("classify", "classify short balanced pairs");
    int claMaxLen = 6, claSearchLen = 0;
    long long claMaxNodes = 500000;
    claCmd->add_option("--max-len", claMaxLen, "enumeration cap on |u|+|v| (default 6)");
    claCmd->add_option("--search-len", claSearchLen, "search length cap (default max-len + 8)");
    claCmd->add_option("--max-nodes", claMaxNodes, "per-pair node budget (default 500000)");

    // ak
    auto* akCmd = app.add_subcommand("ak", "Akbulut-Kirby pair");
    int akN = 0;
    akCmd->add_option("--n", akN, "series index (>= 2)")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const bool json = outputMode == "json";

    try {
        if (app.got_subcommand(foxCmd)) {
            int rx = foxRx, ry = foxRy;
            if (rx == 0 && ry == 0) {
                climpl::scanGenRanks(foxWord, rx, ry);
                climpl::scanGenRanks(foxWrt, rx, ry);
            }
            Alphabet alphabet{std::max(rx, 1), ry};
            Gen wrt = climpl::parseGenToken(foxWrt);
            Word w = parseWord(foxWord, alphabet);
            GroupRingElement d = foxDerive(wrt, w);
            if (json) {
                out << Json{{"schema", "acgroups/fox/1"},
                            {"wrt", genName(wrt)},
                            {"word", formatWord(w)},
                            {"derivative", groupRingToJson(d)},
                            {"display", formatGroupRingElement(d)}}
                           .dump(2)
                    << "\n";
            } else {
                out << formatGroupRingElement(d) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(jacCmd)) {
            int rx = jacRx, ry = jacRy;
            if (rx == 0 && ry == 0) climpl::scanTransformRanks(jacTransform, rx, ry);
            Alphabet alphabet{std::max(rx, 1), ry};
            ACTransform t = parseTransform(jacTransform, alphabet);
            Matrix<GroupRingElement> m = jacobian(toEndo(t));
            if (json) {
                out << Json{{"schema", "acgroups/jacobian/1"},
                            {"transform", formatTransform(t)},
                            {"matrix", matrixToJson(m)}}
                           .dump(2)
                    << "\n";
            } else {
                for (int i = 0; i < m.size(); ++i) {
                    out << "[ ";
                    for (int j = 0; j < m.size(); ++j) {
                        if (j > 0) out << " | ";
                        out << formatGroupRingElement(m.at(i, j));
                    }
                    out << " ]\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(nuCmd)) {
            int rx = 0, ry = 0;
            climpl::scanTransformRanks(nuTransform, rx, ry);
            if (rx > 2) throw std::invalid_argument("nu requires a transformation over rank 2");
            int m = std::max({ry, nuM, nuKappa});
            if (m < 1) throw std::invalid_argument("nu requires at least one conjugator");
            ACTransform t = parseTransform(nuTransform, Alphabet{2, m});
            ProjectiveClass image = nu(t, nuKappa);
            if (json) {
                out << Json{{"schema", "acgroups/nu/1"},
                            {"transform", formatTransform(t)},
                            {"kappa", nuKappa},
                            {"matrix", matrixToJson(image.representative())}}
                           .dump(2)
                    << "\n";
            } else {
                out << climpl::formatLaurentMatrixText(image.representative(), {"t"});
            }
            return 0;
        }

        if (app.got_subcommand(actCmd)) {
            int entries = climpl::countTupleEntries(actTuple);
            int rx = 0, ry = 0;
            climpl::scanGenRanks(actTuple, rx, ry);
            climpl::scanTransformRanks(actTransform, rx, ry);
            if (rx > entries)
                throw std::invalid_argument("tuple has " + std::to_string(entries) +
                                            " entries but mentions x" + std::to_string(rx));
            Alphabet alphabet{entries, ry};
            GroupTuple tuple(alphabet, parseWordTuple(actTuple, alphabet));
            ACTransform t = parseTransform(actTransform, alphabet);
            GroupTuple result = applyTransform(t, tuple);
            if (json) {
                out << Json{{"schema", "acgroups/act/1"},
                            {"transform", formatTransform(t)},
                            {"tuple", formatWordTuple(result.entries)}}
                           .dump(2)
                    << "\n";
            } else {
                out << formatWordTuple(result.entries) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(witCmd)) {
            GroupTuple w = witnessTuple(Alphabet{witR, witS}, witM);
            if (json) {
                out << Json{{"schema", "acgroups/witness/1"},
                            {"m", witM},
                            {"r", witR},
                            {"tuple", formatWordTuple(w.entries)}}
                           .dump(2)
                    << "\n";
            } else {
                out << formatWordTuple(w.entries) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(verCmd)) {
            if (verKMax < 1) throw std::invalid_argument("--k-max must be >= 1");
            std::vector<RelationReport> reports;
            Matrix<LaurentPoly> identity = laurentIdentity2();
            for (int k = 1; k <= verKMax; ++k) {
                RelationReport r;
                r.instance = "k=" + std::to_string(k);
                if (verFamily == "q1" || verFamily == "q2") {
                    r.family = verFamily;
                    Matrix<LaurentPoly> m = verFamily == "q1" ? q1(k) : q2(k);
                    r.holds = projEqual(m, identity);
                    if (!r.holds) r.witness = "matrix " + matrixToJson(m).dump();
                } else {
                    r = verifyRelation(commutatorRelation(k, verM, verKappa), verKappa);
                    r.instance = "k=" + std::to_string(k);
                }
                reports.push_back(std::move(r));
            }
            bool allHold = true;
            for (const RelationReport& r : reports) allHold = allHold && r.holds;
            if (json) {
                Json arr = Json::array();
                for (const RelationReport& r : reports) arr.push_back(relationReportToJson(r));
                out << Json{{"schema", "acgroups/verify-relations/1"},
                            {"family", verFamily},
                            {"reports", arr},
                            {"allHold", allHold}}
                           .dump(2)
                    << "\n";
            } else {
                for (const RelationReport& r : reports)
                    out << (r.holds ? "ok   " : "FAIL ") << r.family << " " << r.instance << "\n";
            }
            return allHold ? 0 : 1;
        }

        if (app.got_subcommand(seaCmd)) {
            WordPair start;
            if (!seaPair.empty()) {
                std::size_t semi = seaPair.find(';');
                if (semi == std::string::npos)
                    throw ParseError("expected \"<word> ; <word>\"", seaPair.size());
                start.first = parseWord(std::string_view(seaPair).substr(0, semi),
                                        searchAlphabet());
                start.second = parseWord(std::string_view(seaPair).substr(semi + 1),
                                         searchAlphabet());
            } else if (!seaCorpus.empty()) {
                std::ifstream in(seaCorpus);
                if (!in) throw std::invalid_argument("cannot open corpus file: " + seaCorpus);
                bool found = false;
                for (const CorpusEntry& entry : parseCorpus(in)) {
                    if (entry.name == seaName) {
                        start = entry.pair;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw std::invalid_argument("corpus has no entry named '" + seaName + "'");
            } else {
                throw std::invalid_argument("search needs --pair or --corpus/--name");
            }
            SearchBudget budget;
            budget.maxTotalLength = seaMaxLen;
            budget.maxNodes = seaMaxNodes;
            if (seaMaxDepth >= 0) budget.maxDepth = seaMaxDepth;
            SearchResult r = bfsTrivialize(start, budget);
            if (json) {
                Json j = searchResultToJson(r);
                j["schema"] = "acgroups/search/1";
                out << j.dump(2) << "\n";
            } else {
                out << "status: " << searchStatusName(r.status) << "\n";
                if (r.status == SearchStatus::Found) {
                    out << "depth: " << r.depth << "\n";
                    out << "path: " << formatTransform(r.path) << "\n";
                }
                out << "nodes expanded: " << r.stats.nodesExpanded
                    << ", frontier peak: " << r.stats.frontierPeak << "\n";
            }
            if (r.status == SearchStatus::Found) return 0;
            return r.status == SearchStatus::BudgetHit ? 3 : 1;
        }

        if (app.got_subcommand(claCmd)) {
            SearchBudget budget;
            budget.maxTotalLength = claSearchLen > 0 ? claSearchLen : claMaxLen + 8;
            budget.maxNodes = claMaxNodes;
            ClassifyReport report = classifySmall(claMaxLen, budget);
            if (json) {
                Json j = classifyReportToJson(report);
                j["schema"] = "acgroups/classify/1";
                out << j.dump(2) << "\n";
            } else {
                out << "canonical pairs: " << report.canonicalPairs
                    << ", determinant-excluded: " << report.determinantExcluded << "\n";
                for (const ClassifyItem& item : report.attempted)
                    out << (item.status == SearchStatus::Found ? "trivialized " : "unresolved  ")
                        << formatWordTuple({item.state.first, item.state.second}) << " depth "
                        << item.depth << "\n";
                out << "trivialized: " << report.trivialized
                    << ", unresolved: " << report.unresolved << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(akCmd)) {
            WordPair p = akPair(akN);
            if (json) {
                out << Json{{"schema", "acgroups/ak/1"},
                            {"n", akN},
                            {"first", formatWord(p.first)},
                            {"second", formatWord(p.second)},
                            {"totalLength", p.first.length() + p.second.length()}}
                           .dump(2)
                    << "\n";
            } else {
                out << formatWord(p.first) << " ; " << formatWord(p.second) << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "no subcommand given\n";
    return 2;
}

}  // namespace acgroups
