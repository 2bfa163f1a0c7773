#pragma once

#include <cstdint>
#include <string>

#include "cartinc/incidence.hpp"

namespace cartinc {

/// Deterministic RNG for instance generation: raw mt19937_64 output with
/// rejection sampling, identical across platforms for a given seed.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // xorshift* keeps the generator header-only and byte-stable.
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct Instance {
    std::string name;
    std::uint64_t seed = 0;
    std::string generator = "file";
    CartesianPointSet<GaussianRational> points;
    CurveFamily<GaussianRational> curves;

    bool is_real() const;
    CartesianPointSet<Rational> real_points() const;  // throws if not real
    CurveFamily<Rational> real_curves() const;
};

enum class SetKind { arithmetic, geometric, random };

SetKind parse_set_kind(const std::string& name);

/// arithmetic: A = B = {1..n}; geometric: {2^0..2^(n-1)}; random: n distinct
/// rationals with numerators and denominators bounded by 1000. Optional curve
/// family: a deterministic mix of curves planted through grid points (lines,
/// parabolas, cubics) and sparse random polynomials of degree <= max_degree.
Instance generate_instance(SetKind kind, int n, std::uint64_t seed, int n_curves = 0,
                           int max_degree = 2);

/// Strict JSON reader: rejects duplicate points with their location, empty or
/// cancelled-out polynomials, malformed GR strings (with byte offsets).
Instance parse_instance_file(const std::string& path);
Instance parse_instance_text(const std::string& text);

std::string instance_to_json_text(const Instance& inst);

GaussianBiPoly poly_from_json_text(const std::string& text);
std::string poly_to_json_text(const GaussianBiPoly& f);
GaussianBiPoly poly_from_json_file(const std::string& path);

/// CSV with columns label,iA,iB,a,b in deterministic edge order.
std::string graph_to_csv(const IncidenceGraph& graph, const Instance& inst);

/// Write-then-rename so readers never observe partial files.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace cartinc
