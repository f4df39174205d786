#include "bcov/pdtext.hpp"

#include <sstream>

namespace bcov {

namespace {

struct LineLexer {
    std::string line;
    int lineno = 0;
    size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line.size();
    }
    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (start == pos) throw ParseError("expected token", lineno, static_cast<int>(pos) + 1);
        return line.substr(start, pos - start);
    }
    std::string rest() {
        skip_ws();
        std::string r = line.substr(pos);
        pos = line.size();
        while (!r.empty() && (r.back() == ' ' || r.back() == '\t' || r.back() == '\r'))
            r.pop_back();
        return r;
    }
};

int parse_int(const std::string& s, int lineno) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, found '" + s + "'", lineno, 1);
    }
}

// key=value with a known key
std::string expect_kv(const std::string& token, const std::string& key, int lineno) {
    auto eq = token.find('=');
    if (eq == std::string::npos || token.substr(0, eq) != key)
        throw ParseError("expected " + key + "=..., found '" + token + "'", lineno, 1);
    return token.substr(eq + 1);
}

}  // namespace

LabeledLink parse_code(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int degree = 0;
    std::vector<Component> components;
    std::vector<Arc> arcs;
    std::vector<Crossing> crossings;

    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        LineLexer lex{raw, lineno, 0};
        if (lex.done()) continue;
        if (raw[lex.pos] == '#') continue;
        std::string head = lex.word();
        if (head == "link") {
            if (have_header) throw ParseError("duplicate link header", lineno, 1);
            degree = parse_int(expect_kv(lex.word(), "degree", lineno), lineno);
            have_header = true;
        } else if (head == "component") {
            if (!have_header) throw ParseError("component before link header", lineno, 1);
            Component comp;
            std::string orient = lex.word();
            if (orient == "-")
                comp.reversed = true;
            else if (orient != "+")
                throw ParseError("component orientation must be + or -", lineno, 1);
            while (!lex.done()) {
                std::string tok = lex.word();
                if (tok == "dotted")
                    comp.dotted = true;
                else if (tok.rfind("framing=", 0) == 0)
                    comp.framing = parse_int(tok.substr(8), lineno);
                else
                    throw ParseError("unknown component attribute '" + tok + "'", lineno, 1);
            }
            components.push_back(comp);
        } else if (head == "arc") {
            if (!have_header) throw ParseError("arc before link header", lineno, 1);
            int comp = parse_int(expect_kv(lex.word(), "component", lineno), lineno);
            std::string label_tok = lex.rest();
            if (label_tok.rfind("label=", 0) != 0)
                throw ParseError("expected label=...", lineno, 1);
            Perm label = [&] {
                try {
                    return Perm::parse(label_tok.substr(6), degree);
                } catch (const Error& e) {
                    throw ParseError(std::string("bad arc label: ") + e.what(), lineno, 1);
                }
            }();
            arcs.push_back(Arc{comp, label});
        } else if (head == "crossing") {
            if (!have_header) throw ParseError("crossing before link header", lineno, 1);
            Crossing c;
            c.over = parse_int(expect_kv(lex.word(), "over", lineno), lineno);
            c.under_in = parse_int(expect_kv(lex.word(), "under_in", lineno), lineno);
            c.under_out = parse_int(expect_kv(lex.word(), "under_out", lineno), lineno);
            std::string sign = expect_kv(lex.word(), "sign", lineno);
            if (sign == "+")
                c.sign = CrossSign::positive;
            else if (sign == "-")
                c.sign = CrossSign::negative;
            else
                throw ParseError("sign must be + or -", lineno, 1);
            crossings.push_back(c);
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno, 1);
        }
    }
    if (!have_header) throw ParseError("missing link header", lineno, 1);
    try {
        return LabeledLink::build(degree, std::move(components), std::move(arcs),
                                  std::move(crossings));
    } catch (const Error& e) {
        throw ParseError(e.what(), lineno, 1);
    }
}

std::string serialize_code(const LabeledLink& link) {
    std::ostringstream out;
    out << "link degree=" << link.degree() << "\n";
    for (const auto& comp : link.components()) {
        out << "component " << (comp.reversed ? '-' : '+');
        if (comp.framing) out << " framing=" << *comp.framing;
        if (comp.dotted) out << " dotted";
        out << "\n";
    }
    for (const auto& arc : link.arcs())
        out << "arc component=" << arc.component << " label=" << arc.label.to_string() << "\n";
    for (const auto& c : link.crossings())
        out << "crossing over=" << c.over << " under_in=" << c.under_in
            << " under_out=" << c.under_out << " sign="
            << (c.sign == CrossSign::positive ? '+' : '-') << "\n";
    return out.str();
}

}  // namespace bcov
