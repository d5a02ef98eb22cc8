#include "whirl/parking.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace whirl {

namespace {

int wrap1(int x, int modulus) {  // representative of x in [1, modulus]
    x %= modulus;
    return x <= 0 ? x + modulus : x;
}

FamilySpec park_family(int n) { return FamilySpec::park(n); }

void check_park(const FunctionWord& f) {
    if (f.k() != f.n()) throw ShapeMismatch("parking words need k = n");
    if (!is_member(park_family(f.n()), f))
        throw NotMember("word " + f.str() + " is not a parking word");
}

}  // namespace

// ---------------------------------------------------------------------------
// TranspositionFactorization
// ---------------------------------------------------------------------------

std::string TranspositionFactorization::str() const {
    std::string out;
    for (const auto& [a, b] : cycles) {
        out.push_back('(');
        if (n + 1 <= 9) {
            out += std::to_string(a);
            out += std::to_string(b);
        } else {
            out += std::to_string(a);
            out.push_back(',');
            out += std::to_string(b);
        }
        out.push_back(')');
    }
    return out;
}

TranspositionFactorization TranspositionFactorization::parse(std::string_view text) {
    std::vector<std::pair<int, int>> cycles;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(') throw ParseError("expected '(' in factorization");
        size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("unbalanced '(' in factorization");
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        int a = 0, b = 0;
        size_t comma = body.find(',');
        if (comma == std::string_view::npos) comma = body.find(' ');
        if (comma != std::string_view::npos) {
            auto pa = body.substr(0, comma);
            auto pb = body.substr(comma + 1);
            auto [p1, e1] = std::from_chars(pa.data(), pa.data() + pa.size(), a);
            auto [p2, e2] = std::from_chars(pb.data(), pb.data() + pb.size(), b);
            if (e1 != std::errc() || e2 != std::errc() || p1 != pa.data() + pa.size() ||
                p2 != pb.data() + pb.size())
                throw ParseError("bad transposition '" + std::string(body) + "'");
        } else {
            if (body.size() != 2 || body[0] < '1' || body[0] > '9' || body[1] < '1' ||
                body[1] > '9')
                throw ParseError("bad transposition '" + std::string(body) + "'");
            a = body[0] - '0';
            b = body[1] - '0';
        }
        cycles.emplace_back(a, b);
        pos = close + 1;
    }
    if (cycles.empty()) throw ParseError("empty factorization");
    TranspositionFactorization fac{static_cast<int>(cycles.size()), std::move(cycles)};
    validate_factorization(fac);
    return fac;
}

std::vector<int> downward_cycle(int n) {
    std::vector<int> image(n + 1);
    for (int x = 1; x <= n + 1; ++x) image[x - 1] = (x == 1) ? n + 1 : x - 1;
    return image;
}

std::vector<int> transposition_product(int n, const std::vector<std::pair<int, int>>& cycles) {
    std::vector<int> image(n + 1);
    std::iota(image.begin(), image.end(), 1);
    // Right-to-left: the last listed transposition acts first, so compose
    // left factors onto the image.
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        for (int& x : image) {
            if (x == it->first) x = it->second;
            else if (x == it->second) x = it->first;
        }
    }
    return image;
}

void validate_factorization(const TranspositionFactorization& fac) {
    if (fac.n < 1) throw BadProduct("factorization needs n >= 1");
    if (fac.cycles.size() != static_cast<size_t>(fac.n))
        throw BadProduct("want exactly " + std::to_string(fac.n) + " transpositions, got " +
                         std::to_string(fac.cycles.size()));
    for (const auto& [a, b] : fac.cycles)
        if (a < 1 || b <= a || b > fac.n + 1)
            throw BadProduct("bad transposition (" + std::to_string(a) + " " + std::to_string(b) +
                             ")");
    if (transposition_product(fac.n, fac.cycles) != downward_cycle(fac.n))
        throw BadProduct("factorization " + fac.str() + " does not multiply to the full cycle");
}

// ---------------------------------------------------------------------------
// Word-side operations
// ---------------------------------------------------------------------------

FunctionWord wbar(const FunctionWord& f) {
    check_park(f);
    FunctionWord g = whirl_at(park_family(f.n()), f, 1);
    std::vector<int> values(g.values().begin() + 1, g.values().end());
    values.push_back(g.values().front());
    return FunctionWord(f.n(), f.k(), std::move(values));
}

TranspositionFactorization park_to_factorization(const FunctionWord& f) {
    check_park(f);
    const int n = f.n();
    if (n == 1) return TranspositionFactorization{1, {{1, 2}}};
    const int mod = n + 1;

    Orbit orbit = orbit_of(park_family(n), f, WhirlOrder::identity(n));
    OrbitBoard board(orbit, f);  // row t is the t-th whirl image of f
    const int rows = board.rows();

    TranspositionFactorization fac{n, {}};
    for (int i = 1; i <= n; ++i) {
        const int a = f(i);
        int found_b = 0;
        for (int t = 0; t < rows; ++t) {
            if (board.value(t, i) != 1) continue;
            // If the unknown entry lands on 1 in row t, it is 1-t up the
            // rotation.
            int b = wrap1(1 - t, mod);
            if (b == a || b == found_b) continue;
            bool consistent = true;
            for (int s = 0; s < rows && consistent; ++s)
                consistent = std::min(wrap1(a + s, mod), wrap1(b + s, mod)) == board.value(s, i);
            if (!consistent) continue;
            if (found_b)
                throw NoConsistentFactorization("two viable partners in column " +
                                                std::to_string(i) + " of " + f.str());
            found_b = b;
        }
        if (!found_b)
            throw NoConsistentFactorization("no viable partner in column " + std::to_string(i) +
                                            " of " + f.str());
        fac.cycles.emplace_back(std::min(a, found_b), std::max(a, found_b));
    }
    validate_factorization(fac);
    return fac;
}

FunctionWord factorization_to_park(const TranspositionFactorization& fac) {
    validate_factorization(fac);
    std::vector<int> values;
    values.reserve(fac.cycles.size());
    for (const auto& [a, b] : fac.cycles) values.push_back(a);
    FunctionWord word(fac.n, fac.n, std::move(values));
    if (!is_member(park_family(fac.n), word))
        throw BadProduct("lesser entries " + word.str() + " do not form a parking word");
    return word;
}

TranspositionFactorization conjugate_factorization(const TranspositionFactorization& fac) {
    validate_factorization(fac);
    const int mod = fac.n + 1;
    TranspositionFactorization out{fac.n, {}};
    out.cycles.assign(fac.cycles.begin() + 1, fac.cycles.end());
    int a = wrap1(fac.cycles.front().first + 1, mod);
    int b = wrap1(fac.cycles.front().second + 1, mod);
    out.cycles.emplace_back(std::min(a, b), std::max(a, b));
    validate_factorization(out);
    // The conjugated factorization must track the word-side root map.
    if (fac.n >= 2 && factorization_to_park(out) != wbar(factorization_to_park(fac)))
        throw Error("conjugation does not track the word rotation");
    return out;
}

// ---------------------------------------------------------------------------
// Labeled noncrossing trees
// ---------------------------------------------------------------------------

void verify_labeled_tree(const LabeledTree& tree) {
    const int n = tree.n;
    const int points = n + 1;
    if (static_cast<int>(tree.edges.size()) != n)
        throw NotTree("want " + std::to_string(n) + " edges, got " +
                      std::to_string(tree.edges.size()));
    for (const auto& [a, b] : tree.edges)
        if (a < 1 || a > points || b < 1 || b > points || a == b)
            throw NotTree("edge endpoints outside the circle");

    // n edges on n+1 points form a tree iff they connect everything.
    std::vector<int> parent(points + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : tree.edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb) throw NotTree("edges close a cycle");
        parent[ra] = rb;
    }

    // Chords (a,b), (c,d) cross iff exactly one of c,d lies strictly between
    // a and b in clockwise order.
    auto strictly_between = [&](int a, int b, int x) {
        int span = (b - a + points) % points;
        int off = (x - a + points) % points;
        return off > 0 && off < span;
    };
    for (size_t i = 0; i < tree.edges.size(); ++i)
        for (size_t j = i + 1; j < tree.edges.size(); ++j) {
            auto [a, b] = tree.edges[i];
            auto [c, d] = tree.edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (strictly_between(a, b, c) != strictly_between(a, b, d))
                throw Crossing("edges " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                               " cross");
        }

    // Around each vertex, labels must increase clockwise across the interior.
    for (int v = 1; v <= points; ++v) {
        std::vector<std::pair<int, int>> incident;  // (clockwise offset, label)
        for (size_t i = 0; i < tree.edges.size(); ++i) {
            auto [a, b] = tree.edges[i];
            if (a == v) incident.emplace_back((b - v + points) % points, static_cast<int>(i + 1));
            if (b == v) incident.emplace_back((a - v + points) % points, static_cast<int>(i + 1));
        }
        std::sort(incident.begin(), incident.end());
        for (size_t t = 1; t < incident.size(); ++t)
            if (incident[t].second < incident[t - 1].second)
                throw LabelOrder("labels out of clockwise order around point " +
                                 std::to_string(v));
    }
}

LabeledTree factorization_to_tree(const TranspositionFactorization& fac) {
    validate_factorization(fac);
    LabeledTree tree{fac.n, fac.cycles};
    verify_labeled_tree(tree);
    return tree;
}

}  // namespace whirl
