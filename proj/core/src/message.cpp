#include "byzfusion/message.hpp"

#include <stdexcept>

namespace byzfusion::protocol {

Message split_message(std::uint64_t value, std::uint64_t chunk_space,
                      std::uint32_t chunk_count) {
  if (chunk_space < 2) {
    throw std::invalid_argument("split_message: chunk space must be >= 2");
  }
  if (chunk_count < 1) {
    throw std::invalid_argument("split_message: chunk count must be >= 1");
  }
  Message message;
  message.value = value;
  message.chunks.assign(chunk_count, 0);
  std::uint64_t rest = value;
  for (std::uint32_t i = chunk_count; i-- > 0;) {
    message.chunks[i] = rest % chunk_space;
    rest /= chunk_space;
  }
  if (rest != 0) {
    throw std::out_of_range("split_message: value does not fit in v chunks");
  }
  return message;
}

std::uint64_t join_chunks(std::span<const std::uint64_t> chunks,
                          std::uint64_t chunk_space) {
  std::uint64_t value = 0;
  for (std::uint64_t chunk : chunks) {
    if (chunk >= chunk_space) {
      throw std::out_of_range("join_chunks: chunk outside chunk space");
    }
    value = value * chunk_space + chunk;
  }
  return value;
}

}  // namespace byzfusion::protocol
