#include "thermoflow/model.hpp"

#include "thermoflow/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace thermoflow {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

double parse_double(const std::string& tok, int line) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError(line, "expected a number, got '" + tok + "'");
    return v;
}

long parse_int(const std::string& tok, int line) {
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

struct BlockHeader {
    std::string kind; // potential | roof | fiber
    std::string name;
    int depth;
    int line;
};

} // namespace

const LcPotential& ModelFile::potential(const std::string& name) const {
    for (const auto& [n, p] : potentials)
        if (n == name) return p;
    throw Error("no potential named '" + name + "' in the model");
}

const Roof& ModelFile::roof(const std::string& name) const {
    for (const auto& [n, r] : roofs)
        if (n == name) return r;
    throw Error("no roof named '" + name + "' in the model");
}

const FiberPotential& ModelFile::fiber(const std::string& name) const {
    for (const auto& [n, f] : fibers)
        if (n == name) return f;
    throw Error("no fiber named '" + name + "' in the model");
}

ModelFile parse_model(const std::string& text) {
    ModelFile model;
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) lines.push_back(line);
    }

    std::size_t i = 0;
    auto next_tokens = [&](std::vector<std::string>& out) -> int {
        while (i < lines.size()) {
            out = tokenize(lines[i]);
            ++i;
            if (!out.empty()) return static_cast<int>(i);
        }
        out.clear();
        return 0;
    };

    std::vector<std::string> toks;
    int lineno = next_tokens(toks);
    while (lineno != 0) {
        if (toks[0] == "sft") {
            if (model.sft) throw ParseError(lineno, "duplicate sft block");
            if (toks.size() != 3 || toks[1] != "n")
                throw ParseError(lineno, "expected 'sft n <N>'");
            const long n = parse_int(toks[2], lineno);
            if (n < 1 || n > 4096) throw ParseError(lineno, "unreasonable alphabet size");
            std::vector<std::vector<int>> rows;
            for (long r = 0; r < n; ++r) {
                const int rl = next_tokens(toks);
                if (rl == 0 || toks[0] != "row")
                    throw ParseError(rl == 0 ? lineno : rl, "expected a 'row' line");
                if (static_cast<long>(toks.size()) != n + 1)
                    throw ParseError(rl, "row must have exactly n entries");
                std::vector<int> row(n);
                for (long c = 0; c < n; ++c)
                    row[c] = static_cast<int>(parse_int(toks[c + 1], rl));
                rows.push_back(std::move(row));
            }
            model.sft.emplace(static_cast<int>(n), rows);
            lineno = next_tokens(toks);
        } else if (toks[0] == "potential" || toks[0] == "roof" || toks[0] == "fiber") {
            if (!model.sft) throw ParseError(lineno, "block appears before the sft block");
            if (toks.size() != 4 || toks[2] != "depth")
                throw ParseError(lineno, "expected '" + toks[0] + " <name> depth <k>'");
            BlockHeader hdr{toks[0], toks[1], static_cast<int>(parse_int(toks[3], lineno)),
                            lineno};
            if (hdr.depth < 1) throw ParseError(lineno, "depth must be >= 1");
            const Sft& sft = *model.sft;
            auto expected = sft.words(hdr.depth);
            std::vector<bool> seen(expected.size(), false);
            std::vector<double> values(expected.size(), 0.0);
            std::vector<std::vector<double>> coeffs(expected.size());
            std::size_t remaining = expected.size();

            while (remaining > 0) {
                const int wl = next_tokens(toks);
                if (wl == 0)
                    throw ParseError(hdr.line, "block '" + hdr.name +
                                                   "' is missing word lines");
                Word w;
                try {
                    w = parse_word(toks[0], sft.alphabet_size());
                } catch (const ValidationError& e) {
                    throw ParseError(wl, e.what());
                }
                if (static_cast<int>(w.size()) != hdr.depth)
                    throw ParseError(wl, "word length does not match the block depth");
                auto it = std::lower_bound(expected.begin(), expected.end(), w);
                if (it == expected.end() || *it != w)
                    throw ParseError(wl, "word '" + toks[0] + "' is not admissible");
                const std::size_t idx = static_cast<std::size_t>(it - expected.begin());
                if (seen[idx]) throw ParseError(wl, "duplicate word '" + toks[0] + "'");
                seen[idx] = true;
                --remaining;
                if (hdr.kind == "fiber") {
                    if (toks.size() < 2)
                        throw ParseError(wl, "fiber line needs at least one coefficient");
                    for (std::size_t c = 1; c < toks.size(); ++c)
                        coeffs[idx].push_back(parse_double(toks[c], wl));
                } else {
                    if (toks.size() != 2)
                        throw ParseError(wl, "expected '<word> <value>'");
                    values[idx] = parse_double(toks[1], wl);
                }
            }

            if (hdr.kind == "potential") {
                model.potentials.emplace_back(hdr.name,
                                              LcPotential(sft, hdr.depth, std::move(values)));
            } else if (hdr.kind == "roof") {
                model.roofs.emplace_back(hdr.name,
                                         Roof(LcPotential(sft, hdr.depth, std::move(values))));
            } else {
                model.fibers.emplace_back(hdr.name,
                                          FiberPotential(sft, hdr.depth, std::move(coeffs)));
            }
            lineno = next_tokens(toks);
        } else {
            throw ParseError(lineno, "unknown key '" + toks[0] + "'");
        }
    }
    if (!model.sft) throw ParseError(1, "model has no sft block");
    return model;
}

std::string print_model(const ModelFile& m) {
    if (!m.sft) throw Error("cannot print a model without an sft block");
    const Sft& sft = *m.sft;
    const int n = sft.alphabet_size();
    std::string out;
    out += "sft n " + std::to_string(n) + "\n";
    for (int i = 0; i < n; ++i) {
        out += "row";
        for (int j = 0; j < n; ++j) out += sft.edge(i, j) ? " 1" : " 0";
        out += "\n";
    }
    for (const auto& [name, p] : m.potentials) {
        out += "potential " + name + " depth " + std::to_string(p.depth()) + "\n";
        for (std::size_t w = 0; w < p.words().size(); ++w)
            out += word_to_string(p.words()[w], n) + " " + format17(p.values()[w]) + "\n";
    }
    for (const auto& [name, r] : m.roofs) {
        const LcPotential& p = r.potential();
        out += "roof " + name + " depth " + std::to_string(p.depth()) + "\n";
        for (std::size_t w = 0; w < p.words().size(); ++w)
            out += word_to_string(p.words()[w], n) + " " + format17(p.values()[w]) + "\n";
    }
    for (const auto& [name, f] : m.fibers) {
        out += "fiber " + name + " depth " + std::to_string(f.depth()) + "\n";
        for (std::size_t w = 0; w < f.words().size(); ++w) {
            out += word_to_string(f.words()[w], n);
            for (double c : f.coeffs()[w]) out += " " + format17(c);
            out += "\n";
        }
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace thermoflow
