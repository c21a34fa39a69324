#include "alcs/strings_core.hpp"

#include <algorithm>
#include <set>

namespace alcs {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty())
        fail(errc::EmptyString, "alphabet needs at least one symbol");
    if (symbols.size() > 256)
        fail(errc::LetterOutOfAlphabet, "alphabets beyond 256 symbols are not supported");
    index_.fill(-1);
    symbols_.reserve(symbols.size());
    for (char c : symbols) {
        auto uc = static_cast<unsigned char>(c);
        if (index_[uc] >= 0)
            fail(errc::LetterOutOfAlphabet,
                 std::string("duplicate alphabet symbol '") + c + "'");
        index_[uc] = static_cast<int>(symbols_.size());
        symbols_.push_back(c);
    }
}

Alphabet Alphabet::from_used_letters(const std::vector<std::string>& strings) {
    std::set<unsigned char> used;
    for (const auto& s : strings)
        for (char c : s) used.insert(static_cast<unsigned char>(c));
    std::string symbols;
    for (unsigned char c : used) symbols.push_back(static_cast<char>(c));
    return Alphabet(symbols);
}

char Alphabet::symbol(int idx) const {
    if (idx < 0 || idx >= size())
        fail(errc::IndexOutOfRange, "alphabet rank out of range");
    return symbols_[static_cast<size_t>(idx)];
}

StringSet validate_string_set(std::vector<std::string> raw, Alphabet alphabet) {
    if (raw.size() < 2)
        fail(errc::TooFewStrings, "need at least two strings, got " +
                                      std::to_string(raw.size()));
    StringSet out{std::move(raw), std::move(alphabet), 0, 0, 0};
    out.m = static_cast<int>(out.strings.size());
    for (int i = 0; i < out.m; ++i) {
        const std::string& s = out.strings[static_cast<size_t>(i)];
        if (s.empty())
            fail(errc::EmptyString, "string " + std::to_string(i + 1) + " is empty");
        for (char c : s)
            if (!out.alphabet.contains(static_cast<unsigned char>(c)))
                fail(errc::LetterOutOfAlphabet,
                     std::string("letter '") + c + "' in string " +
                         std::to_string(i + 1) + " is outside the alphabet");
        out.N += static_cast<long long>(s.size());
        out.ell = std::max(out.ell, static_cast<int>(s.size()));
    }
    return out;
}

IndeterminateString make_indeterminate(std::vector<LetterSet> positions,
                                       const Alphabet& alphabet) {
    if (positions.empty())
        fail(errc::EmptyString, "indeterminate string has no positions");
    IndeterminateString out;
    out.positions.reserve(positions.size());
    for (size_t idx = 0; idx < positions.size(); ++idx) {
        LetterSet& p = positions[idx];
        if (p.empty())
            fail(errc::EmptyLetterSet,
                 "position " + std::to_string(idx + 1) + " has no letters");
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        for (char c : p)
            if (!alphabet.contains(static_cast<unsigned char>(c)))
                fail(errc::LetterOutOfAlphabet,
                     std::string("letter '") + c + "' at position " +
                         std::to_string(idx + 1) + " is outside the alphabet");
        if (p.size() > 1) out.strictly_indeterminate = true;
        out.positions.push_back(std::move(p));
    }
    return out;
}

IndeterminateString indeterminate_from_plain(const std::string& s,
                                             const Alphabet& alphabet) {
    std::vector<LetterSet> positions;
    positions.reserve(s.size());
    for (char c : s) positions.emplace_back(1, c);
    return make_indeterminate(std::move(positions), alphabet);
}

std::string render_indeterminate_slice(const IndeterminateString& s,
                                       int start, int len) {
    if (start < 1 || len < 0 ||
        static_cast<size_t>(start - 1 + len) > s.positions.size())
        fail(errc::IndexOutOfRange, "render slice out of range");
    std::string out;
    for (int i = start - 1; i < start - 1 + len; ++i) {
        const LetterSet& p = s.positions[static_cast<size_t>(i)];
        if (p.size() == 1) {
            out += p;
        } else {
            out += '[';
            out += p;
            out += ']';
        }
    }
    return out;
}

std::string render_indeterminate(const IndeterminateString& s) {
    return render_indeterminate_slice(s, 1, static_cast<int>(s.positions.size()));
}

DistanceMetric::WeightedBuilder::WeightedBuilder() {
    sub_.assign(256 * 256, 1);
    for (int a = 0; a < 256; ++a) sub_[static_cast<size_t>(a) * 256 + a] = 0;
    ins_.fill(1);
    del_.fill(1);
}

DistanceMetric::WeightedBuilder&
DistanceMetric::WeightedBuilder::substitution(unsigned char from, unsigned char to,
                                              long long cost) {
    if (from == to) {
        if (cost != 0)
            fail(errc::ParseError, "substituting a letter for itself must cost 0");
        return *this;
    }
    if (cost < 1)
        fail(errc::ParseError, "substitution costs must be >= 1");
    sub_[static_cast<size_t>(from) * 256 + to] = cost;
    return *this;
}

DistanceMetric::WeightedBuilder&
DistanceMetric::WeightedBuilder::insertion(unsigned char letter, long long cost) {
    if (cost < 1) fail(errc::ParseError, "insertion costs must be >= 1");
    ins_[letter] = cost;
    return *this;
}

DistanceMetric::WeightedBuilder&
DistanceMetric::WeightedBuilder::deletion(unsigned char letter, long long cost) {
    if (cost < 1) fail(errc::ParseError, "deletion costs must be >= 1");
    del_[letter] = cost;
    return *this;
}

DistanceMetric DistanceMetric::WeightedBuilder::build() const {
    auto table = std::make_shared<CostTable>();
    table->sub = sub_;
    table->ins = ins_;
    table->del = del_;
    table->min_indel = *std::min_element(ins_.begin(), ins_.end());
    table->min_del = *std::min_element(del_.begin(), del_.end());
    table->min_indel = std::min(table->min_indel, table->min_del);
    DistanceMetric m(MetricKind::WeightedEdit);
    m.costs_ = std::move(table);
    return m;
}

long long hamming_distance(std::string_view u, std::string_view v) {
    if (u.size() != v.size())
        fail(errc::LengthMismatch,
             "Hamming distance needs equal lengths (" + std::to_string(u.size()) +
                 " vs " + std::to_string(v.size()) + ")");
    long long d = 0;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) ++d;
    return d;
}

long long edit_distance(std::string_view u, std::string_view v,
                        const DistanceMetric& metric) {
    if (!metric.is_edit_like())
        fail(errc::WrongMetric, "edit_distance needs an edit or weighted-edit metric");
    const size_t n = u.size(), m = v.size();
    std::vector<long long> prev(m + 1), cur(m + 1);
    prev[0] = 0;
    for (size_t j = 1; j <= m; ++j)
        prev[j] = prev[j - 1] + metric.ins_cost(static_cast<unsigned char>(v[j - 1]));
    for (size_t i = 1; i <= n; ++i) {
        const auto a = static_cast<unsigned char>(u[i - 1]);
        cur[0] = prev[0] + metric.del_cost(a);
        for (size_t j = 1; j <= m; ++j) {
            const auto b = static_cast<unsigned char>(v[j - 1]);
            long long best = prev[j - 1] + metric.sub_cost(a, b);
            best = std::min(best, prev[j] + metric.del_cost(a));
            best = std::min(best, cur[j - 1] + metric.ins_cost(b));
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

bool letters_match(const LetterSet& a, const LetterSet& b) {
    if (a.empty() || b.empty())
        fail(errc::EmptyLetterSet, "letter-sets must be non-empty");
    // Both sets are canonically sorted, so a two-pointer sweep suffices.
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

} // namespace alcs
