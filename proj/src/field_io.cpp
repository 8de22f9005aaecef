#include "emhd/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace emhd::io {
namespace {

constexpr std::array<char, 8> kMagic{'E', 'M', 'H', 'D', 'S', 'P', 'E', 'C'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put_le(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<char, sizeof(T)> bytes{};
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    out.write(bytes.data(), sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
    std::array<char, sizeof(T)> bytes{};
    if (!in.read(bytes.data(), sizeof(T))) throw std::runtime_error("checkpoint: truncated stream");
    if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 40> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), ptr);
}

void write_csv(const Field& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "x,B\n";
    for (std::size_t j = 0; j < f.size(); ++j) out << format_double(f.grid.x(j)) << ',' << format_double(f[j]) << '\n';
}

Field read_csv(const std::filesystem::path& path, const GridSpec& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    std::vector<double> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("csv: malformed line '" + line + "'");
        samples.push_back(std::stod(line.substr(comma + 1)));
    }
    return Field(g, std::move(samples));
}

void write_checkpoint(const Spectrum& s, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kVersion);
    put_le<std::uint64_t>(out, s.grid.n_modes);
    put_le<double>(out, s.grid.half_length);
    for (const auto& c : s.coeffs) {
        put_le<double>(out, c.real());
        put_le<double>(out, c.imag());
    }
}

Spectrum read_checkpoint(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw std::runtime_error("checkpoint: bad magic");
    if (get_le<std::uint32_t>(in) != kVersion) throw std::runtime_error("checkpoint: unsupported version");
    const auto n = get_le<std::uint64_t>(in);
    const auto L = get_le<double>(in);
    Spectrum s(GridSpec::make(static_cast<std::size_t>(n), L));
    for (auto& c : s.coeffs) {
        const double re = get_le<double>(in);
        const double im = get_le<double>(in);
        c = {re, im};
    }
    return s;
}

void write_checkpoint(const Spectrum& s, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    write_checkpoint(s, out);
}

Spectrum read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_checkpoint(in);
}

Spectrum read_coeff_list(const std::filesystem::path& path, const GridSpec& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Spectrum s(g);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long k;
        double re, im;
        if (!(ls >> k)) continue;
        if (!(ls >> re >> im) || k < 0 || static_cast<std::size_t>(k) >= s.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 'k re im' with 0 <= k <= n/2");
        s[static_cast<std::size_t>(k)] = {re, im};
    }
    return s;
}

}  // namespace emhd::io
