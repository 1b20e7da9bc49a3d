#include "strandlab/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace strandlab {

StrandReport strand(const BettiTable& table, int j)
{
    if (j < 1)
        throw std::invalid_argument("strand: j must be at least 1");
    StrandReport report;
    report.j = j;
    for (int i = 0; i <= table.max_index(); ++i)
        report.values.push_back(table.ideal(i, i + j));
    while (!report.values.empty() && report.values.back() == 0)
        report.values.pop_back();

    int last_nonzero = -1;
    for (int i = 0; i < static_cast<int>(report.values.size()); ++i) {
        if (report.values[i] == 0)
            continue;
        if (last_nonzero >= 0 && i > last_nonzero + 1) {
            report.connected = false;
            report.gap_witness = std::pair(last_nonzero, i);
            break;
        }
        last_nonzero = i;
    }
    return report;
}

std::string vanishing_table(const BettiTable& table)
{
    if (table.is_zero())
        return "";
    int low = table.max_degree();
    int high = 0;
    for (const auto& [key, value] : table.entries()) {
        low = std::min(low, key.second - key.first);
        high = std::max(high, key.second - key.first);
    }
    const int columns = table.max_index() + 2;
    std::ostringstream out;
    for (int j = low; j <= high; ++j) {
        out << j << ':';
        for (int i = 0; i < columns; ++i)
            out << ' ' << (table.ideal(i, i + j) != 0 ? 'X' : '0');
        out << '\n';
    }
    return out.str();
}

StrandTheoremReport check_strand_theorem(const BettiTable& table)
{
    for (const auto& [key, value] : table.entries()) {
        if (key.first == 0 && key.second != 2)
            throw PreconditionError("strand theorem applies to ideals generated in degree 2; found " +
                                    std::to_string(value) + " generator(s) of degree " + std::to_string(key.second));
    }
    StrandTheoremReport report;
    report.strand2 = strand(table, 2);
    report.strand3 = strand(table, 3);
    report.pass = report.strand2.connected && report.strand3.connected;
    return report;
}

SubadditivityReport check_subadditivity(const TVector& t, SubadditivityMode mode)
{
    SubadditivityReport report;
    report.t = t;
    report.mode = mode;
    const int top = t.length() - 1;
    const int b_max = mode == SubadditivityMode::b_at_most_3 ? 3 : top;
    for (int b = 1; b <= b_max; ++b) {
        for (int a = 1; a + b <= top; ++a) {
            const auto ta = t.at(a), tb = t.at(b), tab = t.at(a + b);
            if (!ta || !tb || !tab)
                continue;
            report.checked.emplace_back(a, b);
            if (*tab > *ta + *tb)
                report.violations.push_back({a, b, *tab, *ta + *tb});
        }
    }
    return report;
}

DerivedStats derived_stats(const TVector& t)
{
    DerivedStats stats;
    for (int i = 0; i < t.length(); ++i) {
        if (auto ti = t.at(i)) {
            stats.projective_dimension = i;
            stats.regularity = std::max(stats.regularity, *ti - i);
        }
    }
    return stats;
}

std::vector<std::pair<int, int>> corner_lemma_violations(const BettiTable& table)
{
    std::vector<std::pair<int, int>> out;
    const int top_i = table.max_index() + 1;
    const int top_j = table.max_degree();
    for (int i = 0; i <= top_i; ++i) {
        for (int j = 0; j <= top_j; ++j) {
            if (table.quotient(i, j) == 0 && table.quotient(i, j + 1) == 0 && table.quotient(i + 1, j + 2) != 0)
                out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> taylor_bound_violations(const BettiTable& table)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, value] : table.entries()) {
        const auto [i, j] = key;
        if (j < i + 1 || j > 2 * (i + 1))
            out.push_back(key);
    }
    return out;
}

bool first_strand_monotone(const BettiTable& table)
{
    bool seen_zero = false;
    for (int i = 0; i <= table.max_index(); ++i) {
        const bool nonzero = table.ideal(i, i + 2) != 0;
        if (nonzero && seen_zero)
            return false;
        seen_zero = seen_zero || !nonzero;
    }
    return true;
}

} // namespace strandlab
