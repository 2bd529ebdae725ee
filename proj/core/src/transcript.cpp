#include "byzfusion/transcript.hpp"

#include <sstream>

#include "json_util.hpp"

namespace byzfusion::protocol {

void EventTotals::record(const AttemptEvents& events) {
  ++attempts;
  if (events.c) ++attempts_c;
  auto bump = [&](bool flag, std::uint64_t& given_c, std::uint64_t& given_cc) {
    if (!flag) return;
    if (events.c) {
      ++given_c;
    } else {
      ++given_cc;
    }
  };
  bump(events.a1, a1_c, a1_cc);
  bump(events.a2, a2_c, a2_cc);
  bump(events.a3, a3_c, a3_cc);
  bump(events.b1, b1_c, b1_cc);
  bump(events.b2, b2_c, b2_cc);
  bump(events.pair_distinct, pair_c, pair_cc);
}

void EventTotals::merge(const EventTotals& other) {
  attempts += other.attempts;
  attempts_c += other.attempts_c;
  a1_c += other.a1_c;
  a1_cc += other.a1_cc;
  a2_c += other.a2_c;
  a2_cc += other.a2_cc;
  a3_c += other.a3_c;
  a3_cc += other.a3_cc;
  b1_c += other.b1_c;
  b1_cc += other.b1_cc;
  b2_c += other.b2_c;
  b2_cc += other.b2_cc;
  pair_c += other.pair_c;
  pair_cc += other.pair_cc;
}

std::string SessionTranscript::attempts_to_jsonl(
    std::uint64_t trial_index) const {
  std::ostringstream out;
  for (std::size_t a = 0; a < attempts.size(); ++a) {
    const auto& rec = attempts[a];
    detail::json line;
    line["trial"] = trial_index;
    line["attempt"] = a;
    line["chunk_index"] = rec.chunk_index;
    line["transmitter"] = rec.transmitter_id;
    line["transmitter_role"] =
        rec.transmitter_role == Role::kByzantine ? "byzantine" : "honest";
    line["true_chunk"] = rec.true_chunk;
    if (rec.sent_chunk) {
      line["sent_chunk"] = *rec.sent_chunk;
    } else {
      line["sent_chunk"] = nullptr;
    }
    line["decoded_chunk"] = rec.decoded_chunk;
    line["binning_seed"] = rec.binning_seed;
    line["bin_of_true"] = rec.bin_of_true;
    line["bin_of_decoded"] = rec.bin_of_decoded;
    detail::json polls = detail::json::array();
    for (const auto& poll : rec.polls) {
      detail::json p;
      p["sensor"] = poll.sensor_id;
      p["role"] = poll.role == Role::kByzantine ? "byzantine" : "honest";
      p["intended_bin"] = poll.intended_bin;
      if (poll.sent_bin) {
        p["sent_bin"] = *poll.sent_bin;
      } else {
        p["sent_bin"] = nullptr;
      }
      p["decoded_bin"] = poll.decoded_bin;
      polls.push_back(std::move(p));
    }
    line["polls"] = std::move(polls);
    line["accepted"] = rec.accepted;
    line["events"] = {{"a1", rec.events.a1}, {"a2", rec.events.a2},
                      {"a3", rec.events.a3}, {"b1", rec.events.b1},
                      {"b2", rec.events.b2}, {"c", rec.events.c}};
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace byzfusion::protocol
