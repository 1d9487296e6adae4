#include "bench.hpp"

#include <euclid/oracles.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>

namespace euclid::bench {

namespace {

Integer smallest_prime_factor(Integer n)
{
    for (Integer p = 2; p * p <= n; ++p)
    {
        if (n % p == 0)
        {
            return p;
        }
    }
    return n;
}

template <typename Gcd>
double mean_ns(const std::vector<std::pair<Integer, Integer>>& pairs, std::vector<Integer>& results, Gcd gcd)
{
    results.clear();
    results.reserve(pairs.size());
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [k, n] : pairs)
    {
        results.push_back(gcd(k, n));
    }
    const auto stop = std::chrono::steady_clock::now();
    const std::chrono::duration<double, std::nano> elapsed = stop - start;
    return elapsed.count() / static_cast<double>(pairs.size());
}

} // namespace

std::vector<std::pair<Integer, Integer>> sample_pairs(const Options& options)
{
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Integer> pick_n(2, options.max);
    std::vector<std::pair<Integer, Integer>> pairs;
    pairs.reserve(options.samples);
    for (std::size_t i = 0; i < options.samples; ++i)
    {
        const Integer n = pick_n(rng);
        if (i % 2 == 0)
        {
            std::uniform_int_distribution<Integer> pick_k(1, n - 1);
            Integer k = pick_k(rng);
            while (oracles::classic_gcd(k, n) != 1)
            {
                k = pick_k(rng);
            }
            pairs.emplace_back(k, n);
        }
        else
        {
            const Integer p = smallest_prime_factor(n);
            std::uniform_int_distribution<Integer> pick_multiple(1, n / p);
            pairs.emplace_back(p * pick_multiple(rng), n);
        }
    }
    return pairs;
}

Report run(const Options& options)
{
    if (options.max < 2 || options.max > max_modulus)
    {
        throw std::domain_error("bench needs 2 <= max <= " + std::to_string(max_modulus));
    }
    if (options.samples == 0)
    {
        throw std::domain_error("bench needs at least one sample");
    }

    const auto pairs = sample_pairs(options);
    Report report;
    report.options = options;
    for (const auto& [k, n] : pairs)
    {
        ++(oracles::classic_gcd(k, n) == 1 ? report.coprime_pairs : report.composite_pairs);
    }

    std::vector<Integer> streamed;
    std::vector<Integer> classic;
    report.streaming_ns = mean_ns(pairs, streamed, [](Integer k, Integer n) { return gcd_streaming(k, n).g; });
    report.classic_ns = mean_ns(pairs, classic, [](Integer k, Integer n) { return oracles::classic_gcd(k, n); });
    report.results_agree = streamed == classic;
    return report;
}

void print(std::ostream& out, const Report& report)
{
    const auto& o = report.options;
    out << "gcd benchmark: " << o.samples << " pairs (" << report.coprime_pairs << " coprime, "
        << report.composite_pairs << " composite), 2 <= n <= " << o.max << ", seed " << o.seed << '\n';
    out << std::fixed << std::setprecision(1);
    out << "  array streaming  " << std::setw(14) << report.streaming_ns << " ns/call\n";
    out << "  classic euclid   " << std::setw(14) << report.classic_ns << " ns/call\n";
    out << std::setprecision(2);
    out << "  ratio (streaming / classic): " << report.ratio() << '\n';
    out << "  results agree: " << (report.results_agree ? "yes" : "no") << '\n';
    out << "note: the array method visits up to n + 1 residues (O(n) steps); "
           "divide-with-remainder needs O(log n) steps, so classic is expected to win as n grows.\n";
}

} // namespace euclid::bench
