#include "qlab/mock_theta.hpp"
#include "qlab/products.hpp"

#include <map>

namespace qlab {

namespace {

constexpr index_t kMaxEulerK = 50;

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> entries;

    for (index_t level : hauptmodul_levels()) {
        std::string name = "j" + std::to_string(level);
        std::string summary = (level == 1)
            ? "level 1 hauptmodul E4^3/Delta (the modular j-function)"
            : "level " + std::to_string(level) + " hauptmodul (Conway-Norton eta quotient)";
        entries.push_back({name, summary, [level](index_t prec, const Modulus& mod) {
                               return hauptmodul(level, prec, mod);
                           }});
    }

    entries.push_back({"E4", "weight 4 Eisenstein series 1 + 240 sum sigma_3(n) q^n",
                       [](index_t prec, const Modulus& mod) { return eisenstein_E4(prec, mod); }});
    entries.push_back({"E12hat", "691*E12 = 691 + 65520 sum sigma_11(n) q^n",
                       [](index_t prec, const Modulus& mod) { return eisenstein_E12hat(prec, mod); }});
    entries.push_back({"Delta", "discriminant cusp form q (q)_inf^24",
                       [](index_t prec, const Modulus& mod) { return delta(prec, mod); }});
    for (index_t k = 1; k <= kMaxEulerK; ++k) {
        entries.push_back({"euler" + std::to_string(k),
                           "(q^" + std::to_string(k) + ")_inf",
                           [k](index_t prec, const Modulus& mod) { return euler_inf(k, prec, mod); }});
    }
    entries.push_back({"psi_theta", "Ramanujan theta psi(q) = sum q^{n(n+1)/2}",
                       [](index_t prec, const Modulus& mod) { return theta_psi(prec, mod); }});
    entries.push_back({"borwein_a", "cubic theta a(q) = sum q^{m^2+mn+n^2}",
                       [](index_t prec, const Modulus& mod) { return borwein_a(prec, mod); }});
    entries.push_back({"borwein_c", "cubic theta c(q) = sum q^{m^2+mn+n^2+m+n}",
                       [](index_t prec, const Modulus& mod) { return borwein_c(prec, mod); }});
    entries.push_back({"rr_F", "Rogers-Ramanujan product (q,q^5)(q^4,q^5)/((q^2,q^5)(q^3,q^5))",
                       [](index_t prec, const Modulus& mod) { return rr_fraction_F(prec, mod); }});
    entries.push_back({"partition_gf", "partition generating function 1/(q)_inf",
                       [](index_t prec, const Modulus& mod) { return partition_gf(prec, mod); }});
    entries.push_back({"p10_gf", "(q^10)_inf/(q)_inf, partitions with no part divisible by 10",
                       [](index_t prec, const Modulus& mod) { return p10_gf(prec, mod); }});

    static const std::map<MockTheta, std::string> orders = {
        {MockTheta::mu2, "2nd"},    {MockTheta::f3, "3rd"},     {MockTheta::phi3, "3rd"},
        {MockTheta::chi3, "3rd"},   {MockTheta::phi6, "6th"},   {MockTheta::psi6, "6th"},
        {MockTheta::lambda6, "6th"}, {MockTheta::two_mu6, "6th"}, {MockTheta::U0, "8th"},
        {MockTheta::S0, "8th"},     {MockTheta::S1, "8th"},     {MockTheta::X10, "10th"},
        {MockTheta::chi10, "10th"},
    };
    for (const auto& [name, id] : mock_theta_table()) {
        entries.push_back({name, orders.at(id) + " order mock theta function " + name,
                           [id](index_t prec, const Modulus& mod) {
                               return mock_theta_series(id, prec, mod);
                           }});
    }
    return entries;
}

const std::map<std::string, std::size_t, std::less<>>& catalog_index() {
    static const std::map<std::string, std::size_t, std::less<>> index = [] {
        std::map<std::string, std::size_t, std::less<>> m;
        const auto& cat = series_catalog();
        for (std::size_t i = 0; i < cat.size(); ++i) m[cat[i].name] = i;
        // cN aliases for the hauptmodul coefficient streams c_N(n)
        for (index_t level : hauptmodul_levels())
            m["c" + std::to_string(level)] = m.at("j" + std::to_string(level));
        return m;
    }();
    return index;
}

}  // namespace

const std::vector<CatalogEntry>& series_catalog() {
    static const std::vector<CatalogEntry> catalog = make_catalog();
    return catalog;
}

const CatalogEntry* find_series(std::string_view name) {
    const auto& index = catalog_index();
    auto it = index.find(name);
    if (it == index.end()) return nullptr;
    return &series_catalog()[it->second];
}

LaurentSeries build_series(std::string_view name, index_t prec, const Modulus& mod) {
    const CatalogEntry* entry = find_series(name);
    if (!entry) throw DomainError("unknown series name: " + std::string(name));
    return entry->build(prec, mod);
}

bool is_hauptmodul_name(std::string_view name) {
    if (name.size() < 2 || (name[0] != 'j' && name[0] != 'c')) return false;
    const CatalogEntry* entry = find_series(name);
    return entry && entry->name.size() >= 2 && entry->name[0] == 'j';
}

}  // namespace qlab
