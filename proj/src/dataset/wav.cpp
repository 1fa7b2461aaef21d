// Copyright 2026 The ECHO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echo/dataset/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "echo/core/error.hpp"
#include "echo/core/fs.hpp"

namespace echo {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

double decode_sample(const uint8_t* p, uint16_t bits, uint16_t format) {
  if (format == kFormatFloat) {
    if (bits == 32) {
      float v;
      std::memcpy(&v, p, 4);
      return static_cast<double>(v);
    }
    double v;
    std::memcpy(&v, p, 8);
    return v;
  }
  switch (bits) {
    case 8:
      // 8-bit WAV is unsigned.
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16: {
      int16_t v;
      std::memcpy(&v, p, 2);
      return v / 32768.0;
    }
    case 24: {
      int32_t v = static_cast<int32_t>(p[0]) | (static_cast<int32_t>(p[1]) << 8) |
                  (static_cast<int32_t>(p[2]) << 16);
      if (v & 0x800000) v |= ~0xFFFFFF;
      return v / 8388608.0;
    }
    case 32: {
      int32_t v;
      std::memcpy(&v, p, 4);
      return v / 2147483648.0;
    }
    default:
      throw_error(ErrorCode::UnsupportedEncoding,
                  "unsupported PCM bit depth: " + std::to_string(bits));
  }
}

}  // namespace

WavData read_wav(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  const uint8_t* data = reinterpret_cast<const uint8_t*>(raw.data());
  const size_t size = raw.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw_error(ErrorCode::DecodeFailure, "not a RIFF/WAVE file: " + path.string());
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  const uint8_t* payload = nullptr;
  size_t payload_size = 0;
  bool have_fmt = false;

  size_t pos = 12;
  while (pos + 8 <= size) {
    const char* chunk_id = reinterpret_cast<const char*>(data + pos);
    const uint32_t chunk_size = read_u32(data + pos + 4);
    const size_t body = pos + 8;
    if (body + chunk_size > size) {
      throw_error(ErrorCode::DecodeFailure, "truncated chunk in " + path.string());
    }
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      if (chunk_size < 16) {
        throw_error(ErrorCode::DecodeFailure, "fmt chunk too small in " + path.string());
      }
      format = read_u16(data + body);
      channels = read_u16(data + body + 2);
      sample_rate = read_u32(data + body + 4);
      bits = read_u16(data + body + 14);
      if (format == kFormatExtensible) {
        if (chunk_size < 40) {
          throw_error(ErrorCode::DecodeFailure, "extensible fmt chunk too small");
        }
        // First two bytes of the SubFormat GUID carry the real format tag.
        format = read_u16(data + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      payload = data + body;
      payload_size = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || payload == nullptr) {
    throw_error(ErrorCode::DecodeFailure, "missing fmt/data chunk in " + path.string());
  }
  if (format != kFormatPcm && format != kFormatFloat) {
    throw_error(ErrorCode::UnsupportedEncoding,
                "non-PCM WAV (format tag " + std::to_string(format) + "): " + path.string());
  }
  if (format == kFormatFloat && bits != 32 && bits != 64) {
    throw_error(ErrorCode::UnsupportedEncoding, "float WAV must be 32 or 64 bit");
  }
  if (channels == 0 || sample_rate == 0 || bits == 0) {
    throw_error(ErrorCode::DecodeFailure, "degenerate fmt fields in " + path.string());
  }

  const size_t bytes_per_sample = bits / 8;
  const size_t num_values = payload_size / bytes_per_sample;

  WavData out;
  out.sample_rate_hz = static_cast<int>(sample_rate);
  out.num_channels = channels;
  out.samples.resize(num_values);
  for (size_t i = 0; i < num_values; ++i) {
    out.samples[i] = decode_sample(payload + i * bytes_per_sample, bits, format);
  }
  return out;
}

std::vector<double> to_mono(const WavData& wav) {
  const int ch = wav.num_channels;
  const size_t frames = wav.num_frames();
  if (ch == 1) return wav.samples;
  std::vector<double> mono(frames);
  for (size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (int c = 0; c < ch; ++c) acc += wav.samples[f * ch + c];
    mono[f] = acc / ch;
  }
  return mono;
}

namespace {

void append_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void append_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void write_wav(const std::filesystem::path& path, const std::vector<double>& interleaved,
               int num_channels, int sample_rate_hz, uint16_t format, uint16_t bits) {
  const uint16_t block_align = static_cast<uint16_t>(num_channels * bits / 8);
  const uint32_t data_size = static_cast<uint32_t>(interleaved.size() * bits / 8);

  std::string buf;
  buf.reserve(44 + data_size);
  buf += "RIFF";
  append_u32(buf, 36 + data_size);
  buf += "WAVE";
  buf += "fmt ";
  append_u32(buf, 16);
  append_u16(buf, format);
  append_u16(buf, static_cast<uint16_t>(num_channels));
  append_u32(buf, static_cast<uint32_t>(sample_rate_hz));
  append_u32(buf, static_cast<uint32_t>(sample_rate_hz) * block_align);
  append_u16(buf, block_align);
  append_u16(buf, bits);
  buf += "data";
  append_u32(buf, data_size);

  for (double v : interleaved) {
    if (format == kFormatPcm) {
      double clamped = v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v);
      int32_t q = static_cast<int32_t>(std::lround(clamped * 32767.0));
      append_u16(buf, static_cast<uint16_t>(static_cast<int16_t>(q)));
    } else {
      float f = static_cast<float>(v);
      char b[4];
      std::memcpy(b, &f, 4);
      buf.append(b, 4);
    }
  }
  atomic_write_file(path, buf);
}

}  // namespace

void write_wav_pcm16(const std::filesystem::path& path, const std::vector<double>& mono,
                     int sample_rate_hz) {
  write_wav(path, mono, 1, sample_rate_hz, kFormatPcm, 16);
}

void write_wav_float32(const std::filesystem::path& path, const std::vector<double>& mono,
                       int sample_rate_hz) {
  write_wav(path, mono, 1, sample_rate_hz, kFormatFloat, 32);
}

void write_wav_pcm16_multi(const std::filesystem::path& path,
                           const std::vector<double>& interleaved, int num_channels,
                           int sample_rate_hz) {
  write_wav(path, interleaved, num_channels, sample_rate_hz, kFormatPcm, 16);
}

}  // namespace echo
