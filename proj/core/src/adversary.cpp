#include "byzfusion/adversary.hpp"

#include <stdexcept>

#include "byzfusion/message.hpp"

namespace byzfusion::adversary {

namespace {

class HonestMimic final : public Strategy {
 public:
  ChunkAction chunk_action(const AdversaryView&) override {
    return ChunkAction::honest();
  }
  VerifyAction verify_action(const AdversaryView&) override {
    return VerifyAction::honest();
  }
  std::string_view name() const override { return "honest_mimic"; }
};

// Verify-duty behavior shared by the lying strategies: push the bin of the
// coordinated substituted chunk when this attempt has one, else answer
// honestly.
VerifyAction coordinated_verify(const AdversaryView& view,
                                VerifierBehavior behavior) {
  if (behavior == VerifierBehavior::kCoordinated && view.coordination &&
      view.coordination->substituted_chunk && view.binning) {
    return VerifyAction::substitute(
        view.binning->bin_of(*view.coordination->substituted_chunk));
  }
  return VerifyAction::honest();
}

class AlwaysLie final : public Strategy {
 public:
  AlwaysLie(std::int64_t offset, VerifierBehavior verifiers)
      : offset_(offset), verifiers_(verifiers) {
    if (offset_ == 0) {
      throw std::invalid_argument("always_lie: offset must be nonzero");
    }
  }

  void begin_session(const SessionInit& init) override {
    const std::uint64_t space = init.params->chunk_space();
    if (offset_ % static_cast<std::int64_t>(space) == 0) {
      throw std::invalid_argument(
          "always_lie: offset must be nonzero modulo the chunk space");
    }
  }

  ChunkAction chunk_action(const AdversaryView& view) override {
    const std::uint64_t space = view.chunk_space;
    const std::uint64_t truth = view.true_chunks[view.chunk_index];
    const auto shift = static_cast<std::uint64_t>(
        ((offset_ % static_cast<std::int64_t>(space)) + space) %
        static_cast<std::int64_t>(space));
    return ChunkAction::substitute((truth + shift) % space);
  }

  VerifyAction verify_action(const AdversaryView& view) override {
    return coordinated_verify(view, verifiers_);
  }

  std::string_view name() const override { return "always_lie"; }

 private:
  std::int64_t offset_;
  VerifierBehavior verifiers_;
};

class MdpOptimal final : public Strategy {
 public:
  MdpOptimal(std::shared_ptr<const analysis::MdpSolution> solution,
             std::int64_t lie_offset, VerifierBehavior verifiers)
      : solution_(std::move(solution)),
        lie_offset_(lie_offset),
        verifiers_(verifiers) {
    if (!solution_) {
      throw std::invalid_argument("mdp_optimal: solution must be provided");
    }
    if (lie_offset_ == 0) {
      throw std::invalid_argument("mdp_optimal: lie offset must be nonzero");
    }
  }

  void begin_session(const SessionInit& init) override {
    const auto& p = solution_->params;
    if (p.chunk_count != init.params->chunk_count ||
        p.beta != init.params->byzantine_fraction) {
      throw std::invalid_argument(
          "mdp_optimal: solution was solved for different (beta, v)");
    }
  }

  ChunkAction chunk_action(const AdversaryView& view) override {
    if (view.chunk_index >= solution_->error_decision.size() ||
        solution_->error_decision[view.chunk_index] ==
            analysis::ByzDecision::kLie) {
      const std::uint64_t space = view.chunk_space;
      const std::uint64_t truth = view.true_chunks[view.chunk_index];
      const auto shift = static_cast<std::uint64_t>(
          ((lie_offset_ % static_cast<std::int64_t>(space)) + space) %
          static_cast<std::int64_t>(space));
      return ChunkAction::substitute((truth + shift) % space);
    }
    return ChunkAction::honest();
  }

  VerifyAction verify_action(const AdversaryView& view) override {
    return coordinated_verify(view, verifiers_);
  }

  std::string_view name() const override { return "mdp_optimal"; }

 private:
  std::shared_ptr<const analysis::MdpSolution> solution_;
  std::int64_t lie_offset_;
  VerifierBehavior verifiers_;
};

class HalfSplit final : public Strategy {
 public:
  explicit HalfSplit(HalfSplitSpec spec) : spec_(spec) {}

  void begin_session(const SessionInit& init) override {
    beta_ = init.params->byzantine_fraction;
    if (beta_ < 0.5) {
      throw std::invalid_argument(
          "half_split: undefined for byzantine_fraction < 1/2");
    }
    const std::uint64_t m = init.params->message_count();
    if (spec_.fixed_false_message) {
      false_message_ = *spec_.fixed_false_message;
      if (false_message_ >= m) {
        throw std::invalid_argument("half_split: false message out of range");
      }
      if (false_message_ == init.message) {
        throw std::invalid_argument(
            "half_split: false message equals the true message");
      }
    } else {
      if (spec_.false_message_offset % m == 0) {
        throw std::invalid_argument(
            "half_split: false message offset must be nonzero modulo M");
      }
      false_message_ = (init.message + spec_.false_message_offset) % m;
    }
    false_chunks_ = protocol::split_message(false_message_,
                                            init.params->chunk_space(),
                                            init.params->chunk_count)
                        .chunks;
    group_seed_ = mix_seed(init.adversary_seed, 0x68616c66ull);
  }

  ChunkAction chunk_action(const AdversaryView& view) override {
    if (in_false_group(view.sensor_id)) {
      return ChunkAction::substitute(false_chunks_[view.chunk_index]);
    }
    return ChunkAction::honest();
  }

  VerifyAction verify_action(const AdversaryView& view) override {
    if (in_false_group(view.sensor_id) && view.binning) {
      return VerifyAction::substitute(
          view.binning->bin_of(false_chunks_[view.chunk_index]));
    }
    return VerifyAction::honest();
  }

  std::string_view name() const override { return "half_split"; }

  std::uint64_t false_message() const { return false_message_; }

 private:
  // Conditional on being Byzantine, a sensor pushes the false message with
  // probability (1/2)/beta; the rest mimic honest behavior.
  bool in_false_group(std::uint64_t sensor_id) const {
    return hash_unit(group_seed_, sensor_id) < 0.5 / beta_;
  }

  HalfSplitSpec spec_;
  double beta_ = 0.5;
  std::uint64_t false_message_ = 0;
  std::vector<std::uint64_t> false_chunks_;
  std::uint64_t group_seed_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> honest_mimic() {
  return std::make_unique<HonestMimic>();
}

std::unique_ptr<Strategy> always_lie(std::int64_t offset,
                                     VerifierBehavior verifiers) {
  return std::make_unique<AlwaysLie>(offset, verifiers);
}

std::unique_ptr<Strategy> mdp_optimal(
    std::shared_ptr<const analysis::MdpSolution> solution,
    std::int64_t lie_offset, VerifierBehavior verifiers) {
  return std::make_unique<MdpOptimal>(std::move(solution), lie_offset,
                                      verifiers);
}

std::unique_ptr<Strategy> half_split(HalfSplitSpec spec) {
  return std::make_unique<HalfSplit>(spec);
}

}  // namespace byzfusion::adversary
