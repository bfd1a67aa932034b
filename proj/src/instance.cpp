#include "dikeopt/instance.hpp"

#include <algorithm>

#include "dikeopt/error.hpp"

namespace dikeopt {

Instance::Instance(int horizon, std::vector<std::string> segments,
                   std::vector<Rational> dikeHeights, std::vector<Rational> barrierHeights)
    : horizon_(horizon),
      segments_(std::move(segments)),
      dikeHeights_(std::move(dikeHeights)),
      barrierHeights_(std::move(barrierHeights)) {
  const int periods = horizon_ + 1;
  const int mD = numDikeLevels();
  const int mB = numBarrierLevels();
  const int nSeg = numSegments();
  if (horizon_ >= 0 && mD >= 0 && mB >= 0) {
    dikeCost_.resize(static_cast<size_t>(periods) * nSeg * orderedPairCount(mD));
    dikeExpDam_.resize(static_cast<size_t>(periods) * nSeg * mD * mB);
    barrierCost_.resize(static_cast<size_t>(periods) * orderedPairCount(mB));
    barrierExpDam_.resize(static_cast<size_t>(periods) * mB);
  }
}

int Instance::segmentIndex(const std::string& id) const {
  for (int d = 0; d < numSegments(); ++d) {
    if (segments_[d] == id) return d;
  }
  return -1;
}

namespace {

void check_range(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::IndexOutOfRange, what);
}

}  // namespace

int Instance::dikeCostIndex(int t, int d, int h1, int h2) const {
  check_range(t >= 0 && t <= horizon_, "period out of range in dike cost lookup");
  check_range(d >= 0 && d < numSegments(), "segment out of range in dike cost lookup");
  check_range(0 <= h1 && h1 <= h2 && h2 < numDikeLevels(), "height pair out of range in dike cost lookup");
  const int pairs = orderedPairCount(numDikeLevels());
  return (t * numSegments() + d) * pairs + orderedPairIndex(h1, h2, numDikeLevels());
}

int Instance::dikeExpDamIndex(int t, int d, int h2, int hb) const {
  check_range(t >= 0 && t <= horizon_, "period out of range in dike damage lookup");
  check_range(d >= 0 && d < numSegments(), "segment out of range in dike damage lookup");
  check_range(0 <= h2 && h2 < numDikeLevels(), "dike height out of range in dike damage lookup");
  check_range(0 <= hb && hb < numBarrierLevels(), "barrier height out of range in dike damage lookup");
  return ((t * numSegments() + d) * numDikeLevels() + h2) * numBarrierLevels() + hb;
}

int Instance::barrierCostIndex(int t, int hb1, int hb2) const {
  check_range(t >= 0 && t <= horizon_, "period out of range in barrier cost lookup");
  check_range(0 <= hb1 && hb1 <= hb2 && hb2 < numBarrierLevels(),
              "height pair out of range in barrier cost lookup");
  return t * orderedPairCount(numBarrierLevels()) + orderedPairIndex(hb1, hb2, numBarrierLevels());
}

int Instance::barrierExpDamIndex(int t, int hb) const {
  check_range(t >= 0 && t <= horizon_, "period out of range in barrier damage lookup");
  check_range(0 <= hb && hb < numBarrierLevels(), "barrier height out of range in barrier damage lookup");
  return t * numBarrierLevels() + hb;
}

const Money& Instance::dikeCost(int t, int d, int h1, int h2) const {
  const auto& slot = dikeCost_[dikeCostIndex(t, d, h1, h2)];
  if (!slot)
    fail(ErrorCode::InvalidInstance, "missing dike_cost(" + std::to_string(t) + "," + segments_[d] +
                                         "," + std::to_string(h1) + "," + std::to_string(h2) + ")");
  return *slot;
}

const Money& Instance::dikeExpDam(int t, int d, int h2, int hb) const {
  const auto& slot = dikeExpDam_[dikeExpDamIndex(t, d, h2, hb)];
  if (!slot)
    fail(ErrorCode::InvalidInstance, "missing dike_expdam(" + std::to_string(t) + "," + segments_[d] +
                                         "," + std::to_string(h2) + "," + std::to_string(hb) + ")");
  return *slot;
}

const Money& Instance::barrierCost(int t, int hb1, int hb2) const {
  const auto& slot = barrierCost_[barrierCostIndex(t, hb1, hb2)];
  if (!slot)
    fail(ErrorCode::InvalidInstance, "missing barrier_cost(" + std::to_string(t) + "," +
                                         std::to_string(hb1) + "," + std::to_string(hb2) + ")");
  return *slot;
}

const Money& Instance::barrierExpDam(int t, int hb) const {
  const auto& slot = barrierExpDam_[barrierExpDamIndex(t, hb)];
  if (!slot)
    fail(ErrorCode::InvalidInstance,
         "missing barrier_expdam(" + std::to_string(t) + "," + std::to_string(hb) + ")");
  return *slot;
}

bool Instance::hasDikeCost(int t, int d, int h1, int h2) const {
  return dikeCost_[dikeCostIndex(t, d, h1, h2)].has_value();
}
bool Instance::hasDikeExpDam(int t, int d, int h2, int hb) const {
  return dikeExpDam_[dikeExpDamIndex(t, d, h2, hb)].has_value();
}
bool Instance::hasBarrierCost(int t, int hb1, int hb2) const {
  return barrierCost_[barrierCostIndex(t, hb1, hb2)].has_value();
}
bool Instance::hasBarrierExpDam(int t, int hb) const {
  return barrierExpDam_[barrierExpDamIndex(t, hb)].has_value();
}

void Instance::setDikeCost(int t, int d, int h1, int h2, Money value) {
  dikeCost_[dikeCostIndex(t, d, h1, h2)] = std::move(value);
}
void Instance::setDikeExpDam(int t, int d, int h2, int hb, Money value) {
  dikeExpDam_[dikeExpDamIndex(t, d, h2, hb)] = std::move(value);
}
void Instance::setBarrierCost(int t, int hb1, int hb2, Money value) {
  barrierCost_[barrierCostIndex(t, hb1, hb2)] = std::move(value);
}
void Instance::setBarrierExpDam(int t, int hb, Money value) {
  barrierExpDam_[barrierExpDamIndex(t, hb)] = std::move(value);
}

void Instance::fillAllTables(const Money& value) {
  for (auto& slot : dikeCost_) slot = value;
  for (auto& slot : dikeExpDam_) slot = value;
  for (auto& slot : barrierCost_) slot = value;
  for (auto& slot : barrierExpDam_) slot = value;
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& f : findings) {
    if (!out.empty()) out += "; ";
    out += f.what;
  }
  return out;
}

namespace {

void check_height_list(const std::vector<Rational>& heights, const char* name,
                       ValidationReport& report) {
  if (heights.empty()) {
    report.findings.push_back({ValidationFinding::Kind::BadHeightList,
                               std::string(name) + " is empty"});
    return;
  }
  for (size_t i = 1; i < heights.size(); ++i) {
    if (!(heights[i - 1] < heights[i])) {
      report.findings.push_back({ValidationFinding::Kind::BadHeightList,
                                 std::string(name) + " is not strictly increasing at index " +
                                     std::to_string(i)});
      return;
    }
  }
}

bool is_identifier(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  if (inst.horizon() < 1) {
    report.findings.push_back({ValidationFinding::Kind::BadHorizon,
                               "horizon must be a positive integer, got " +
                                   std::to_string(inst.horizon())});
    return report;
  }
  check_height_list(inst.dikeHeights(), "dike_heights", report);
  check_height_list(inst.barrierHeights(), "barrier_heights", report);
  for (int d = 0; d < inst.numSegments(); ++d) {
    const std::string& id = inst.segments()[d];
    if (!is_identifier(id)) {
      report.findings.push_back({ValidationFinding::Kind::BadSegment,
                                 "segment id '" + id + "' is not alphanumeric"});
    }
    for (int e = d + 1; e < inst.numSegments(); ++e) {
      if (inst.segments()[e] == id) {
        report.findings.push_back(
            {ValidationFinding::Kind::BadSegment, "duplicate segment id '" + id + "'"});
      }
    }
  }
  if (!report.valid()) return report;

  auto entry = [&report](bool present, const Money* value, const std::string& name) {
    if (!present) {
      report.findings.push_back({ValidationFinding::Kind::MissingEntry, "missing " + name});
    } else if (*value < 0) {
      report.findings.push_back({ValidationFinding::Kind::NegativeValue,
                                 name + " is negative (" + to_decimal_string(*value) + ")"});
    }
  };

  const int mD = inst.numDikeLevels();
  const int mB = inst.numBarrierLevels();
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (int d = 0; d < inst.numSegments(); ++d) {
      const std::string& id = inst.segments()[d];
      for (int h1 = 0; h1 < mD; ++h1) {
        for (int h2 = h1; h2 < mD; ++h2) {
          bool present = inst.hasDikeCost(t, d, h1, h2);
          entry(present, present ? &inst.dikeCost(t, d, h1, h2) : nullptr,
                "dike_cost(" + std::to_string(t) + "," + id + "," + std::to_string(h1) + "," +
                    std::to_string(h2) + ")");
        }
      }
      for (int h2 = 0; h2 < mD; ++h2) {
        for (int hb = 0; hb < mB; ++hb) {
          bool present = inst.hasDikeExpDam(t, d, h2, hb);
          entry(present, present ? &inst.dikeExpDam(t, d, h2, hb) : nullptr,
                "dike_expdam(" + std::to_string(t) + "," + id + "," + std::to_string(h2) + "," +
                    std::to_string(hb) + ")");
        }
      }
    }
    for (int hb1 = 0; hb1 < mB; ++hb1) {
      for (int hb2 = hb1; hb2 < mB; ++hb2) {
        bool present = inst.hasBarrierCost(t, hb1, hb2);
        entry(present, present ? &inst.barrierCost(t, hb1, hb2) : nullptr,
              "barrier_cost(" + std::to_string(t) + "," + std::to_string(hb1) + "," +
                  std::to_string(hb2) + ")");
      }
    }
    for (int hb = 0; hb < mB; ++hb) {
      bool present = inst.hasBarrierExpDam(t, hb);
      entry(present, present ? &inst.barrierExpDam(t, hb) : nullptr,
            "barrier_expdam(" + std::to_string(t) + "," + std::to_string(hb) + ")");
    }
  }
  return report;
}

void require_valid(const Instance& inst) {
  ValidationReport report = validate_instance(inst);
  if (!report.valid()) fail(ErrorCode::InvalidInstance, report.summary());
}

HeightPlan zero_plan(const Instance& inst) {
  HeightPlan plan;
  plan.barrier.assign(inst.numPeriods(), 0);
  plan.segment.assign(inst.numSegments(), std::vector<int>(inst.numPeriods(), 0));
  return plan;
}

bool is_monotone_from_zero(std::span<const int> profile, int levels) {
  if (profile.empty() || profile.front() != 0) return false;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 0 || profile[i] >= levels) return false;
    if (i > 0 && profile[i] < profile[i - 1]) return false;
  }
  return true;
}

bool plan_less(const HeightPlan& a, const HeightPlan& b) {
  if (a.barrier != b.barrier) return a.barrier < b.barrier;
  return a.segment < b.segment;
}

Money evaluate_plan(const Instance& inst, const HeightPlan& plan) {
  const int periods = inst.numPeriods();
  if (static_cast<int>(plan.barrier.size()) != periods ||
      static_cast<int>(plan.segment.size()) != inst.numSegments())
    fail(ErrorCode::IndexOutOfRange, "plan shape does not match instance");
  if (!is_monotone_from_zero(plan.barrier, inst.numBarrierLevels()))
    fail(ErrorCode::NonMonotonePlan, "barrier profile is not monotone from height 0");
  for (int d = 0; d < inst.numSegments(); ++d) {
    if (static_cast<int>(plan.segment[d].size()) != periods)
      fail(ErrorCode::IndexOutOfRange, "plan shape does not match instance");
    if (!is_monotone_from_zero(plan.segment[d], inst.numDikeLevels()))
      fail(ErrorCode::NonMonotonePlan,
           "segment " + inst.segments()[d] + " profile is not monotone from height 0");
  }

  Money total = 0;
  for (int t = 0; t < periods; ++t) {
    const int hbPrev = t == 0 ? 0 : plan.barrier[t - 1];
    const int hb = plan.barrier[t];
    total += inst.barrierCost(t, hbPrev, hb);
    total += inst.barrierExpDam(t, hb);
    for (int d = 0; d < inst.numSegments(); ++d) {
      const int hPrev = t == 0 ? 0 : plan.segment[d][t - 1];
      const int h = plan.segment[d][t];
      total += inst.dikeCost(t, d, hPrev, h);
      total += inst.dikeExpDam(t, d, h, hb);
    }
  }
  return total;
}

std::uint64_t monotone_profile_count(int periods, int levels) {
  // C(periods-1 + levels-1, levels-1), computed in integers.
  const int n = periods - 1 + levels - 1;
  const int k = levels - 1;
  mpz_class c(1);
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  if (!c.fits_ulong_p()) return UINT64_MAX;
  return static_cast<std::uint64_t>(c.get_ui());
}

MonotoneProfileEnumerator::MonotoneProfileEnumerator(int periods, int levels)
    : periods_(periods), levels_(levels) {}

bool MonotoneProfileEnumerator::next(std::vector<int>& profile) {
  if (periods_ <= 0 || levels_ <= 0) return false;
  if (!started_) {
    current_.assign(periods_, 0);
    started_ = true;
    profile = current_;
    return true;
  }
  // Advance the last position that can still grow, then level the tail.
  for (int i = periods_ - 1; i >= 1; --i) {
    if (current_[i] < levels_ - 1) {
      ++current_[i];
      for (int j = i + 1; j < periods_; ++j) current_[j] = current_[i];
      profile = current_;
      return true;
    }
  }
  return false;
}

}  // namespace dikeopt
