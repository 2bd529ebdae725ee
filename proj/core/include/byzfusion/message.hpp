#ifndef BYZFUSION_MESSAGE_HPP
#define BYZFUSION_MESSAGE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace byzfusion::protocol {

// A fusion message and its chunk decomposition. Values are 0-based: the
// message lies in [0, M) and each chunk in [0, chunk_space). Chunks are the
// base-`chunk_space` digits of the value, most significant first.
struct Message {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> chunks;
};

Message split_message(std::uint64_t value, std::uint64_t chunk_space,
                      std::uint32_t chunk_count);

std::uint64_t join_chunks(std::span<const std::uint64_t> chunks,
                          std::uint64_t chunk_space);

}  // namespace byzfusion::protocol

#endif  // BYZFUSION_MESSAGE_HPP
