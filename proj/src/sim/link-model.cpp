#include "icnlowpan/sim/link-model.hpp"

#include <algorithm>

namespace icnlowpan::sim {

InterfererSchedule::InterfererSchedule(uint64_t seed, InterfererParams params)
  : m_params(params)
  , m_rng(seed)
{
  m_next = draw(m_params.silenceMin, m_params.silenceMax);
  m_leftInBurst = m_params.burstLength;
}

Time
InterfererSchedule::draw(Time lo, Time hi)
{
  std::uniform_int_distribution<int64_t> d(lo.count(), hi.count());
  return Time{d(m_rng)};
}

void
InterfererSchedule::extendTo(Time horizon)
{
  const Time frame = airtime(m_params.frameBytes);
  while (m_next < horizon) {
    m_busy.push_back({m_next, m_next + frame});
    m_next += frame;
    if (--m_leftInBurst == 0) {
      m_next += draw(m_params.silenceMin, m_params.silenceMax);
      m_leftInBurst = m_params.burstLength;
    }
    else {
      m_next += draw(m_params.gapMin, m_params.gapMax);
    }
  }
}

bool
InterfererSchedule::overlaps(Interval frame)
{
  extendTo(frame.end);
  auto it = std::upper_bound(m_busy.begin(), m_busy.end(), frame.start,
                             [] (Time t, const Interval& b) { return t < b.end; });
  return it != m_busy.end() && it->start < frame.end;
}

std::vector<Interval>
InterfererSchedule::intervalsUntil(Time horizon)
{
  extendTo(horizon);
  std::vector<Interval> out;
  for (const auto& b : m_busy) {
    if (b.start >= horizon)
      break;
    out.push_back(b);
  }
  return out;
}

bool
collisionCheck(Interval frame, InterfererSchedule* interferer, double baseLoss, Rng& rng)
{
  if (interferer != nullptr && interferer->overlaps(frame))
    return true;
  if (baseLoss <= 0.0)
    return false;
  return std::bernoulli_distribution(std::min(baseLoss, 1.0))(rng);
}

} // namespace icnlowpan::sim
