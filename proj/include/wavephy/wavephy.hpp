#pragma once

// Umbrella header for the complete baseband simulator.

#include "wavephy/bits.hpp"
#include "wavephy/channel.hpp"
#include "wavephy/config.hpp"
#include "wavephy/convolutional.hpp"
#include "wavephy/dft.hpp"
#include "wavephy/harness.hpp"
#include "wavephy/interleaver.hpp"
#include "wavephy/io.hpp"
#include "wavephy/mapper.hpp"
#include "wavephy/numerology.hpp"
#include "wavephy/ofdm.hpp"
#include "wavephy/rng.hpp"
#include "wavephy/rxchain.hpp"
#include "wavephy/scrambler.hpp"
#include "wavephy/svg_plot.hpp"
#include "wavephy/txchain.hpp"
