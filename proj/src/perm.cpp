#include "bcov/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace bcov {

Perm::Perm(int degree) : degree_(degree) {
    if (degree < 1) throw Error("permutation degree must be positive");
    images_.resize(degree);
    std::iota(images_.begin(), images_.end(), 1);
}

Perm::Perm(int degree, std::vector<int> images) : degree_(degree), images_(std::move(images)) {
    if (degree < 1) throw Error("permutation degree must be positive");
    if (static_cast<int>(images_.size()) != degree)
        throw Error("images table has wrong length for degree " + std::to_string(degree));
    std::vector<char> seen(degree + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > degree) throw Error("image out of range: " + std::to_string(v));
        if (seen[v]) throw Error("images table is not a bijection");
        seen[v] = 1;
    }
}

Perm Perm::transposition(int degree, int a, int b) {
    if (a < 1 || a > degree || b < 1 || b > degree || a == b)
        throw Error("bad transposition (" + std::to_string(a) + " " + std::to_string(b) +
                    ") at degree " + std::to_string(degree));
    Perm p(degree);
    std::swap(p.images_[a - 1], p.images_[b - 1]);
    return p;
}

int Perm::apply(int sheet) const {
    if (sheet < 1 || sheet > degree_) throw Error("sheet out of range: " + std::to_string(sheet));
    return images_[sheet - 1];
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree_; ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

bool Perm::is_transposition() const {
    int moved = 0;
    for (int i = 0; i < degree_; ++i)
        if (images_[i] != i + 1) ++moved;
    if (moved != 2) return false;
    for (int i = 0; i < degree_; ++i)
        if (images_[i] != i + 1 && images_[images_[i] - 1] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree_ + 1, 0);
    for (int start = 1; start <= degree_; ++start) {
        if (seen[start] || images_[start - 1] == start) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            seen[x] = 1;
            x = images_[x - 1];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::pair<int, int> Perm::transposition_pair() const {
    if (!is_transposition()) throw Error("not a transposition: " + to_string());
    for (int i = 1; i <= degree_; ++i)
        if (images_[i - 1] != i) return {i, images_[i - 1]};
    throw Error("unreachable");
}

std::string Perm::to_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "id";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Perm Perm::inverse() const {
    std::vector<int> inv(degree_);
    for (int i = 0; i < degree_; ++i) inv[images_[i] - 1] = i + 1;
    return Perm(degree_, std::move(inv));
}

Perm Perm::parse(const std::string& text, int degree) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (text.compare(i, 2, "id") == 0) {
        i += 2;
        skip_ws();
        if (i != text.size()) throw ParseError("trailing characters after 'id'");
        return Perm(degree);
    }
    Perm result(degree);
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected sheet number in cycle");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v < 1 || v > degree)
                throw ParseError("sheet " + std::to_string(v) + " out of range for degree " +
                                 std::to_string(degree));
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
        }
        if (cyc.size() < 2) throw ParseError("cycle must move at least two sheets");
        std::vector<char> dup(degree + 1, 0);
        for (int v : cyc) {
            if (dup[v]) throw ParseError("repeated sheet in cycle");
            dup[v] = 1;
        }
        // The cycle (c0 c1 ... ck) maps c0->c1->...->ck->c0.
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 1);
        for (size_t k = 0; k < cyc.size(); ++k) images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
        Perm cycle_perm(degree, std::move(images));
        // Disjointness of listed cycles is the caller's responsibility; apply left to right.
        result = compose(result, cycle_perm);
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty permutation text");
    return result;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw Error("degree mismatch in compose: " + std::to_string(p.degree()) + " vs " +
                    std::to_string(q.degree()));
    std::vector<int> images(p.degree());
    for (int i = 1; i <= p.degree(); ++i) images[i - 1] = p.apply(q.apply(i));
    return Perm(p.degree(), std::move(images));
}

Perm conjugate(const Perm& a, const Perm& b) {
    return compose(a, compose(b, a.inverse()));
}

std::vector<std::vector<int>> orbits(std::span<const Perm> gens, int degree) {
    if (degree < 1) throw Error("degree must be positive");
    for (const Perm& g : gens)
        if (g.degree() != degree) throw Error("generator degree mismatch in orbits");
    std::vector<int> owner(degree + 1, 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= degree; ++start) {
        if (owner[start]) continue;
        std::vector<int> orbit{start};
        owner[start] = 1;
        for (size_t k = 0; k < orbit.size(); ++k) {
            for (const Perm& g : gens) {
                int y = g.apply(orbit[k]);
                if (!owner[y]) {
                    owner[y] = 1;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool is_transitive(std::span<const Perm> gens, int degree) {
    return orbits(gens, degree).size() == 1;
}

}  // namespace bcov
