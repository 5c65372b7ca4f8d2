#include "qceqio/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qceqio {

ParseError::ParseError(int line_, int column_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + message),
      line(line_),
      column(column_) {}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;  // comment to end of line
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

uint64_t parse_uint(const Token& tok, int line_no, const char* what, uint64_t max) {
    if (tok.text.empty() || !std::all_of(tok.text.begin(), tok.text.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        throw ParseError(line_no, tok.column,
                         std::string("expected ") + what + ", got '" + tok.text + "'");
    }
    uint64_t value = 0;
    for (char c : tok.text) {
        value = value * 10 + static_cast<uint64_t>(c - '0');
        if (value > max) {
            throw ParseError(line_no, tok.column, std::string(what) + " out of range");
        }
    }
    return value;
}

struct NameEntry {
    GateKind kind;
    bool dag;
};

const std::map<std::string, NameEntry>& name_table() {
    static const std::map<std::string, NameEntry> table = {
        {"X", {GateKind::X, false}},      {"Z", {GateKind::Z, false}},
        {"S", {GateKind::S, false}},      {"SDG", {GateKind::Sdg, false}},
        {"T", {GateKind::T, false}},      {"TDG", {GateKind::Tdg, false}},
        {"H", {GateKind::H, false}},      {"RK", {GateKind::RK, false}},
        {"RKDG", {GateKind::RK, true}},   {"CX", {GateKind::CX, false}},
        {"CZ", {GateKind::CZ, false}},    {"CRK", {GateKind::CRK, false}},
        {"CRKDG", {GateKind::CRK, true}}, {"CCX", {GateKind::CCX, false}},
        {"CCZ", {GateKind::CCZ, false}},  {"SWAP", {GateKind::SWAP, false}},
    };
    return table;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit c;
    bool have_header = false;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;

        if (!have_header) {
            if (upper(toks[0].text) != "QUBITS") {
                throw ParseError(line_no, toks[0].column, "expected 'qubits N' header");
            }
            if (toks.size() != 2) {
                throw ParseError(line_no, toks[0].column,
                                 "header takes exactly one integer");
            }
            c.n_wires =
                static_cast<uint32_t>(parse_uint(toks[1], line_no, "wire count", 1u << 20));
            have_header = true;
            continue;
        }

        auto it = name_table().find(upper(toks[0].text));
        if (it == name_table().end()) {
            throw ParseError(line_no, toks[0].column,
                             "unknown gate '" + toks[0].text + "'");
        }
        Gate g;
        g.kind = it->second.kind;
        g.dag = it->second.dag;

        size_t arg = 1;
        if (gate_has_exponent(g.kind)) {
            if (toks.size() < 2) {
                throw ParseError(line_no, toks[0].column,
                                 "missing rotation exponent");
            }
            g.k = static_cast<uint32_t>(
                parse_uint(toks[1], line_no, "rotation exponent", 0xffff'ffffull));
            if (g.k < 1) {
                throw ParseError(line_no, toks[1].column,
                                 "rotation exponent must be >= 1");
            }
            arg = 2;
        }

        size_t arity = static_cast<size_t>(gate_arity(g.kind));
        if (toks.size() - arg != arity) {
            throw ParseError(line_no, toks[0].column,
                             gate_name(g.kind, g.dag) + " takes " +
                                 std::to_string(arity) + " wire argument(s)");
        }
        for (; arg < toks.size(); ++arg) {
            uint32_t w = static_cast<uint32_t>(
                parse_uint(toks[arg], line_no, "wire index", 0xffff'ffffull));
            if (w >= c.n_wires) {
                throw ParseError(line_no, toks[arg].column,
                                 "wire " + std::to_string(w) + " out of range (qubits " +
                                     std::to_string(c.n_wires) + ")");
            }
            if (std::find(g.wires.begin(), g.wires.end(), w) != g.wires.end()) {
                throw ParseError(line_no, toks[arg].column,
                                 "duplicate wire " + std::to_string(w));
            }
            g.wires.push_back(w);
        }
        c.gates.push_back(std::move(g));
    }

    if (!have_header) {
        throw ParseError(line_no ? line_no : 1, 1, "expected 'qubits N' header");
    }
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_wires) + "\n";
    for (const Gate& g : c.gates) {
        out += gate_name(g.kind, g.dag);
        if (gate_has_exponent(g.kind)) {
            out += ' ';
            out += std::to_string(g.k);
        }
        for (uint32_t w : g.wires) {
            out += ' ';
            out += std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.n_wires = c.n_wires;
    out.labels = c.labels;
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        out.gates.push_back(gate_adjoint(*it));
    }
    return out;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (a.n_wires != b.n_wires) {
        throw WireMismatchError("concat: wire counts differ (" +
                                std::to_string(a.n_wires) + " vs " +
                                std::to_string(b.n_wires) + ")");
    }
    Circuit out = a;
    if (out.labels.empty()) out.labels = b.labels;
    out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
    return out;
}

Circuit tensor_extend(const Circuit& c, uint32_t extra_wires) {
    Circuit out = c;
    out.n_wires += extra_wires;
    if (!out.labels.empty()) out.labels.resize(out.n_wires);
    return out;
}

GateStats gate_stats(const Circuit& c) {
    GateStats st;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::Z:
            case GateKind::S:
            case GateKind::Sdg:
            case GateKind::H:
            case GateKind::CX:
            case GateKind::CZ:
            case GateKind::SWAP:
                ++st.clifford_count;
                break;
            case GateKind::T:
            case GateKind::Tdg:
            case GateKind::CCX:
            case GateKind::CCZ:
                ++st.t_count;
                break;
            case GateKind::RK:
                // RK(1)=Z, RK(2)=S(dg) are Clifford; RK(3) is T-like.
                if (g.k <= 2) {
                    ++st.clifford_count;
                } else if (g.k == 3) {
                    ++st.t_count;
                } else {
                    ++st.rotation_count;
                }
                break;
            case GateKind::CRK:
                // CRK(1)=CZ is Clifford; higher exponents are rotations.
                if (g.k == 1) {
                    ++st.clifford_count;
                } else {
                    ++st.rotation_count;
                }
                break;
        }
    }
    return st;
}

std::vector<std::pair<size_t, size_t>> idle_intervals(
    const Circuit& c, const std::vector<uint32_t>& wires) {
    std::vector<std::pair<size_t, size_t>> out;
    size_t run_start = 0;
    for (size_t i = 0; i < c.gates.size(); ++i) {
        bool touched = false;
        for (uint32_t w : c.gates[i].wires) {
            if (std::find(wires.begin(), wires.end(), w) != wires.end()) {
                touched = true;
                break;
            }
        }
        if (touched) {
            if (i > run_start) out.emplace_back(run_start, i);
            run_start = i + 1;
        }
    }
    if (c.gates.size() > run_start) out.emplace_back(run_start, c.gates.size());
    return out;
}

uint64_t parse_bitstring(const std::string& bits, uint32_t n_wires) {
    if (n_wires > 64) {
        throw std::invalid_argument("bitstrings support at most 64 wires");
    }
    if (bits.size() != n_wires) {
        throw std::invalid_argument("bitstring '" + bits + "' must have exactly " +
                                    std::to_string(n_wires) + " characters");
    }
    uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may contain only 0 and 1");
        }
        value = (value << 1) | static_cast<uint64_t>(c - '0');
    }
    return value;
}

std::string format_bitstring(uint64_t basis, uint32_t n_wires) {
    std::string out(n_wires, '0');
    for (uint32_t i = 0; i < n_wires; ++i) {
        if (basis & (1ull << (n_wires - 1 - i))) out[i] = '1';
    }
    return out;
}

}  // namespace qceqio
