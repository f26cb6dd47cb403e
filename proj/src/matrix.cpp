#include "vfree/matrix.hpp"

#include <cctype>
#include <cstdlib>

#include "vfree/text.hpp"

namespace vfree {

bool Mat2::unimodular() const {
    mpz_class det_value = det();
    return det_value == 1 || det_value == -1;
}

Mat2 Mat2::inverse() const {
    mpz_class s = det();
    return {s * d, -s * b, -s * c, s * a};
}

mpz_class Mat2::coefficient_sum() const { return abs(a) + abs(b) + abs(c) + abs(d); }

std::string Mat2::str() const {
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }

Mat2 mat(long a, long b, long c, long d) { return {a, b, c, d}; }

Mat2 parse_matrix(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("matrix at position " + std::to_string(i) + ": " + what);
    };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char ch) {
        skip();
        if (i >= text.size() || text[i] != ch) throw fail(std::string("expected '") + ch + "'");
        ++i;
    };
    auto integer = [&] {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw fail("expected an integer");
        std::string s(text.substr(start, i - start));
        if (s[0] == '+') s.erase(0, 1);
        return mpz_class(s, 10);
    };
    Mat2 m;
    expect('[');
    expect('[');
    m.a = integer();
    expect(',');
    m.b = integer();
    expect(']');
    expect(',');
    expect('[');
    m.c = integer();
    expect(',');
    m.d = integer();
    expect(']');
    expect(']');
    skip();
    if (i != text.size()) throw fail("trailing characters");
    return m;
}

MatrixGroup matrix_closure(const std::vector<std::pair<std::string, Mat2>>& generators) {
    MatrixGroup out;
    out.group = FiniteGroup::from_closure(Mat2::identity(), generators,
                                          [](const Mat2& x, const Mat2& y) { return x * y; }, &out.elements);
    return out;
}

namespace {

Element element_of(const MatrixGroup& g, const Mat2& m) {
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        if (g.elements[i] == m) return static_cast<Element>(i);
    throw InvariantBreach("matrix " + m.str() + " is not in the vertex group");
}

struct Factor {
    std::string name;
    std::vector<std::pair<std::string, Mat2>> generators;
};

Preset build_preset(std::string name, bool special_linear, const Factor& u, const Factor& v,
                    const std::vector<std::pair<std::string, Mat2>>& edge_generators,
                    const std::map<std::string, std::string>& augmented_names,
                    std::map<std::string, Mat2> constants, const std::map<std::string, std::string>& spellings) {
    MatrixGroup gu = matrix_closure(u.generators);
    MatrixGroup gv = matrix_closure(v.generators);
    MatrixGroup ge = matrix_closure(edge_generators);

    GraphOfGroupsData data;
    data.vertices.push_back({u.name, gu.group});
    data.vertices.push_back({v.name, gv.group});
    EdgeData e;
    e.symbol = "e";
    e.source = 0;
    e.target = 1;
    e.group = ge.group;
    for (const Mat2& m : ge.elements) {
        e.source_map.push_back(element_of(gu, m));
        e.target_map.push_back(element_of(gv, m));
    }
    data.edges.push_back(std::move(e));

    GraphOfGroups gog = augment_edge_image_generators(
        GraphOfGroups::from_data(std::move(data)),
        [&augmented_names](const GraphOfGroupsData& d, VertexId w, Element g) {
            auto it = augmented_names.find(d.vertices[w].name + ":" + std::to_string(g));
            return it != augmented_names.end() ? it->second : default_symbol_name(d, w, g);
        });

    Preset p;
    p.name = std::move(name);
    p.gog = gog;
    p.special_linear = special_linear;
    const Alphabet& alpha = gog.alphabet();
    for (SymbolId s = 0; s < alpha.size(); ++s) {
        if (alpha.is_edge(s)) {
            p.symbol_matrices.push_back(Mat2::identity());
            continue;
        }
        const MatrixGroup& g = alpha[s].owner == 0 ? gu : gv;
        p.symbol_matrices.push_back(g.elements[gog.vertex_group(alpha[s].owner).generators()[alpha[s].local].element]);
    }
    p.constants = std::move(constants);
    for (const auto& [key, text] : spellings) {
        Word w = parse_word(alpha, text);
        if (!is_aloop(gog, w) || word_to_matrix(p, w) != p.constants.at(key))
            throw InvariantBreach("preset word for " + key + " is wrong");
        p.constant_words[key] = std::move(w);
    }
    for (const Word& r : presentation(gog).relations())
        if (word_to_matrix(p, r) != Mat2::identity()) throw InvariantBreach("preset violates a relation");
    return p;
}

Preset make_sl2z() {
    Mat2 a = mat(0, -1, 1, 0);
    Mat2 b = mat(0, 1, -1, 1);
    Mat2 minus = mat(-1, 0, 0, -1);
    // Element 2 is a^2 in C4 and element 3 is b^3 in C6 under closure order.
    return build_preset("sl2z", true, {"u", {{"a", a}}}, {"v", {{"b", b}}}, {{"t", minus}},
                        {{"u:2", "s"}, {"v:3", "z"}},
                        {{"a", a}, {"b", b}, {"E", a * b}, {"F", a.inverse() * b.inverse()}, {"J", a}, {"-I", minus}},
                        {{"E", "a e b e^-1"}, {"F", "a^-1 e b^-1 e^-1"}, {"J", "a"}, {"-I", "s"}});
}

Preset make_gl2z() {
    Mat2 A = mat(1, -1, 0, -1);
    Mat2 B = mat(1, 0, 0, -1);
    Mat2 C = mat(0, 1, 1, 0);
    Mat2 minus = mat(-1, 0, 0, -1);
    Mat2 E = B * A;
    Mat2 F = C * E * C;
    std::map<std::string, std::string> names;
    MatrixGroup gu = matrix_closure({{"a", A}, {"c", C}, {"m", minus}});
    MatrixGroup gv = matrix_closure({{"b", B}, {"c'", C}, {"m'", minus}});
    names["u:" + std::to_string(element_of(gu, -C))] = "n";
    names["v:" + std::to_string(element_of(gv, -C))] = "n'";
    return build_preset("gl2z", false, {"u", {{"a", A}, {"c", C}, {"m", minus}}},
                        {"v", {{"b", B}, {"c'", C}, {"m'", minus}}}, {{"t1", C}, {"t2", minus}}, names,
                        {{"A", A}, {"B", B}, {"C", C}, {"E", E}, {"F", F}, {"-I", minus}},
                        {{"A", "a"},
                         {"B", "e b e^-1"},
                         {"C", "c"},
                         {"E", "e b e^-1 a"},
                         {"F", "c e b e^-1 a c"},
                         {"-I", "m"}});
}

// Cancels e e^-1 pairs and rewrites every vertex run as the fixed shortest
// word of its value, in one pass over an A-loop at the base.
Word tidy(const GraphOfGroups& gog, const Word& word) {
    const Alphabet& alpha = gog.alphabet();
    Word out;
    VertexId at = gog.base_vertex();
    std::size_t run_start = 0;
    Element value = gog.vertex_group(at).identity();
    auto crossed_into = [&](Letter l) {
        const EdgeData& e = gog.edge(alpha[l.symbol].owner);
        return l.inverse ? e.source : e.target;
    };
    for (const Letter& l : word) {
        if (!alpha.is_edge(l.symbol)) {
            Element x = gog.evaluate_run(at, std::span<const Letter>(&l, 1));
            value = gog.vertex_group(at).mul(value, x);
            const Word& w = gog.element_word(at, value);
            out.resize(run_start);
            out.insert(out.end(), w.begin(), w.end());
            continue;
        }
        if (out.size() == run_start && run_start > 0 && out.back() == l.inverted()) {
            Letter back = out.back();
            out.pop_back();
            at = crossed_into(back.inverted());
            run_start = out.size();
            while (run_start > 0 && !alpha.is_edge(out[run_start - 1].symbol)) --run_start;
            value = gog.evaluate_run(at, std::span<const Letter>(out).subspan(run_start));
            continue;
        }
        out.push_back(l);
        at = crossed_into(l);
        run_start = out.size();
        value = gog.vertex_group(at).identity();
    }
    return out;
}

// Accumulates left multiplications op^k on `current` and the word of their
// inverses, so that at any point M = word(ops)^-1-ordered * current.
class Reducer {
public:
    Reducer(const Preset& p, const Mat2& m) : preset_(p), current_(m) {}

    void apply(const std::string& op, const mpz_class& k) {
        if (k == 0) return;
        if (!k.fits_slong_p()) throw NotUnimodular("matrix entries too large to encode");
        long n = k.get_si();
        const Word& w = preset_.constant_words.at(op);
        Word back = n > 0 ? inverse_word(w) : w;
        Mat2 step = preset_.constants.at(op);
        if (n < 0) step = step.inverse();
        Mat2 power = Mat2::identity();
        long times = n > 0 ? n : -n;
        out_.reserve(out_.size() + back.size() * static_cast<std::size_t>(times));
        for (long i = 0; i < times; ++i) out_.insert(out_.end(), back.begin(), back.end());
        // Square-and-multiply for the matrix power.
        Mat2 base = step;
        for (unsigned long e = static_cast<unsigned long>(times); e; e >>= 1) {
            if (e & 1) power = power * base;
            base = base * base;
        }
        current_ = power * current_;
    }
    void apply(const std::string& op) { apply(op, 1); }

    const Mat2& current() const { return current_; }

    Word finish(const std::string& residual) {
        if (!residual.empty()) {
            const Word& w = preset_.constant_words.at(residual);
            if (current_ != preset_.constants.at(residual)) throw InvariantBreach("row reduction left a wrong residual");
            out_.insert(out_.end(), w.begin(), w.end());
        } else if (current_ != Mat2::identity()) {
            throw InvariantBreach("row reduction left a wrong residual");
        }
        return tidy(preset_.gog, out_);
    }

private:
    const Preset& preset_;
    Mat2 current_;
    Word out_;
};

Word encode_gl(const Preset& preset, const Mat2& m) {
    Reducer red(preset, m);
    auto p = [&] { return red.current().a; };
    auto r = [&] { return red.current().c; };
    if (p() < 0 && r() < 0) {
        red.apply("-I");
    } else if (p() < 0) {
        red.apply("B");
        red.apply("-I");
    } else if (r() < 0) {
        red.apply("B");
    }
    while (r() != 0) {
        if (p() == 0 || p() > r()) {
            red.apply("C");
        } else {
            mpz_class q = r() / p();
            red.apply("F", q);
        }
    }
    if (p() != 1) throw InvariantBreach("row reduction ended with gcd " + p().get_str());
    mpz_class s = red.current().d;
    red.apply("E", red.current().b * s);
    return red.finish(s == 1 ? "" : "B");
}

Word encode_sl(const Preset& preset, const Mat2& m) {
    Reducer red(preset, m);
    auto p = [&] { return red.current().a; };
    auto r = [&] { return red.current().c; };
    while (p() != 0 && r() != 0) {
        if (abs(p()) <= abs(r())) {
            mpz_class q = r() / p();
            red.apply("F", q);
        } else {
            mpz_class q = p() / r();
            red.apply("E", q);
        }
    }
    if (r() == 0) {
        if (p() == -1) red.apply("-I");
    } else {
        mpz_class s = r();
        red.apply("E", -s);
        red.apply("F", s);
    }
    if (p() != 1 || r() != 0) throw InvariantBreach("row reduction ended with gcd " + p().get_str());
    red.apply("E", red.current().b);
    return red.finish("");
}

}  // namespace

const Preset& sl2z_preset() {
    static const Preset preset = make_sl2z();
    return preset;
}

const Preset& gl2z_preset() {
    static const Preset preset = make_gl2z();
    return preset;
}

Mat2 word_to_matrix(const Preset& preset, std::span<const Letter> word) {
    Mat2 out;
    for (const Letter& l : word) {
        if (l.symbol >= preset.symbol_matrices.size()) throw ForeignSymbol("symbol id " + std::to_string(l.symbol));
        const Mat2& x = preset.symbol_matrices[l.symbol];
        out = out * (l.inverse ? x.inverse() : x);
    }
    return out;
}

Word matrix_to_word(const Preset& preset, const Mat2& m) {
    if (!m.unimodular()) throw NotUnimodular("determinant of " + m.str() + " is " + m.det().get_str());
    if (preset.special_linear) {
        if (m.det() != 1) throw DetMismatch("matrix " + m.str() + " has determinant -1");
        return encode_sl(preset, m);
    }
    return encode_gl(preset, m);
}

bool matrix_member(const Preset& preset, const Mat2& target, std::span<const Mat2> generators) {
    for (const Mat2& g : generators)
        if (!g.unimodular()) throw NotUnimodular("determinant of " + g.str() + " is " + g.det().get_str());
    if (!target.unimodular()) throw NotUnimodular("determinant of " + target.str() + " is " + target.det().get_str());
    std::vector<Word> words;
    words.reserve(generators.size());
    for (const Mat2& g : generators) words.push_back(reduce_word(preset.gog, matrix_to_word(preset, g)));
    FoldedSubgroup fs = build_subgroup_graph(preset.gog, words);
    return member(fs, reduce_word(preset.gog, matrix_to_word(preset, target)));
}

}  // namespace vfree
