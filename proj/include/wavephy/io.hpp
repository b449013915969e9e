#pragma once

#include <bit>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavephy/bits.hpp"
#include "wavephy/dft.hpp"

namespace wavephy {

static_assert(std::endian::native == std::endian::little,
              "I/Q file layout assumes a little-endian host");

// Interleaved float32 little-endian baseband samples: re, im, re, im, ...
inline void write_iq(const std::string& path, const std::vector<cplx>& samples) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::vector<float> buf(2 * samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        buf[2 * i] = static_cast<float>(samples[i].real());
        buf[2 * i + 1] = static_cast<float>(samples[i].imag());
    }
    f.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

inline std::vector<cplx> read_iq(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw std::runtime_error("cannot open: " + path);
    const std::streamsize bytes = f.tellg();
    if (bytes % (2 * sizeof(float)) != 0)
        throw std::runtime_error("truncated I/Q file (not a whole number of complex float32): " + path);
    f.seekg(0);
    std::vector<float> buf(static_cast<std::size_t>(bytes) / sizeof(float));
    f.read(reinterpret_cast<char*>(buf.data()), bytes);
    if (!f.good()) throw std::runtime_error("read failed: " + path);
    std::vector<cplx> out(buf.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = cplx(buf[2 * i], buf[2 * i + 1]);
    return out;
}

// Plain-text bit files: '0'/'1' characters, whitespace ignored.
inline void write_bits(const std::string& path, const BitSeq& bits) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        f.put(bits[i] ? '1' : '0');
        if ((i + 1) % 64 == 0) f.put('\n');
    }
    if (bits.size() % 64 != 0) f.put('\n');
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

inline BitSeq read_bits(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    BitSeq bits;
    char c;
    while (f.get(c)) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        else throw std::runtime_error(std::string("bad character '") + c + "' in bit file: " + path);
    }
    return bits;
}

}  // namespace wavephy
