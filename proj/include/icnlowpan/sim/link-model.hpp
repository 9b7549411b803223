#ifndef ICNLOWPAN_SIM_LINK_MODEL_HPP
#define ICNLOWPAN_SIM_LINK_MODEL_HPP

#include "icnlowpan/common.hpp"

#include <chrono>
#include <random>

namespace icnlowpan::sim {

using Time = std::chrono::microseconds;
using Rng = std::mt19937_64;

/// 250 kbit/s O-QPSK: 32 µs per octet.
inline constexpr Time kByteAirtime{32};
/// preamble (4) + SFD (1) + PHY header (1)
inline constexpr size_t kPhyOverhead = 6;
/// RX/TX turnaround of a 2.4 GHz 802.15.4 radio
inline constexpr Time kTurnaround{192};

/// On-air time of a frame of \p frameLen bytes (MAC header and FCS included).
constexpr Time
airtime(size_t frameLen)
{
  return kByteAirtime * static_cast<int64_t>(kPhyOverhead + frameLen);
}

/// Half-open busy interval [start, end) in simulated time.
struct Interval
{
  Time start{};
  Time end{};

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct InterfererParams
{
  size_t burstLength = 200;
  size_t frameBytes = 127;
  /// idle time between the end of one interferer frame and the start of the next
  Time gapMin = std::chrono::milliseconds(5);
  Time gapMax = std::chrono::milliseconds(15);
  Time silenceMin = std::chrono::milliseconds(500);
  Time silenceMax = std::chrono::milliseconds(1500);
};

/** \brief Bursty cross traffic: silence, then a burst of back-to-back frames, repeated.
 *
 *  Intervals are generated lazily and only depend on the seed, so any two
 *  schedules built from the same seed agree on every query.
 */
class InterfererSchedule
{
public:
  explicit
  InterfererSchedule(uint64_t seed, InterfererParams params = {});

  /// Whether [start, end) overlaps any interferer transmission.
  bool
  overlaps(Interval frame);

  /// Transmissions starting before \p horizon.
  std::vector<Interval>
  intervalsUntil(Time horizon);

  const InterfererParams&
  params() const
  {
    return m_params;
  }

private:
  void
  extendTo(Time horizon);

  Time
  draw(Time lo, Time hi);

private:
  InterfererParams m_params;
  Rng m_rng;
  std::vector<Interval> m_busy;
  Time m_next{};
  size_t m_leftInBurst = 0;
};

/** \brief Decides whether a frame is lost.
 *
 *  Lost if it overlaps an interferer transmission, otherwise lost with
 *  probability \p baseLoss. \p rng is only consulted in the second case.
 */
bool
collisionCheck(Interval frame, InterfererSchedule* interferer, double baseLoss, Rng& rng);

} // namespace icnlowpan::sim

#endif // ICNLOWPAN_SIM_LINK_MODEL_HPP
