#include "tmset/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace tmset {
namespace {

void append_point(std::string& out, complex z, double value) {
  out += format_double(z.real());
  out += ',';
  out += format_double(z.imag());
  out += ',';
  out += format_double(value);
  out += '\n';
}

template <typename Field, typename ToValue>
std::string grid_csv(const Field& field, ToValue&& to_value) {
  std::string out = "re,im,value\n";
  out.reserve(out.size() + field.data.size() * 24);
  for (std::uint32_t r = 0; r < field.grid.rows; ++r) {
    for (std::uint32_t c = 0; c < field.grid.cols; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * field.grid.cols + c;
      append_point(out, field.grid.cell_center(r, c), to_value(field.data[i]));
    }
  }
  return out;
}

std::uint8_t scale_byte(double v) {
  const double scaled = std::round(v * 255.0);
  if (!(scaled > 0.0)) return 0;
  if (scaled >= 255.0) return 255;
  return static_cast<std::uint8_t>(scaled);
}

template <typename Field, typename ToByte>
std::string grid_pgm(const Field& field, ToByte&& to_byte) {
  std::string out = "P5\n" + std::to_string(field.grid.cols) + " " +
                    std::to_string(field.grid.rows) + "\n255\n";
  out.reserve(out.size() + field.data.size());
  for (const auto v : field.data) out.push_back(static_cast<char>(to_byte(v)));
  return out;
}

void put_u32be(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::uint32_t crc32_of(std::string_view bytes) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t n = 0; n < 256; ++n) {
      std::uint32_t c = n;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      t[n] = c;
    }
    return t;
  }();
  std::uint32_t crc = 0xffffffffu;
  for (unsigned char ch : bytes) crc = table[(crc ^ ch) & 0xffu] ^ (crc >> 8);
  return crc ^ 0xffffffffu;
}

std::uint32_t adler32_of(std::string_view bytes) {
  std::uint32_t a = 1, b = 0;
  for (unsigned char ch : bytes) {
    a = (a + ch) % 65521u;
    b = (b + a) % 65521u;
  }
  return (b << 16) | a;
}

void put_chunk(std::string& out, const char type[4], std::string_view payload) {
  put_u32be(out, static_cast<std::uint32_t>(payload.size()));
  std::string body(type, 4);
  body.append(payload);
  out += body;
  put_u32be(out, crc32_of(body));
}

// zlib stream made of stored deflate blocks: fully determined by the input.
std::string stored_zlib(std::string_view raw) {
  std::string out;
  out.push_back('\x78');
  out.push_back('\x01');
  std::size_t pos = 0;
  do {
    const std::size_t len = std::min<std::size_t>(raw.size() - pos, 65535);
    const bool last = pos + len == raw.size();
    out.push_back(last ? '\x01' : '\x00');
    out.push_back(static_cast<char>(len & 0xff));
    out.push_back(static_cast<char>((len >> 8) & 0xff));
    out.push_back(static_cast<char>(~len & 0xff));
    out.push_back(static_cast<char>((~len >> 8) & 0xff));
    out.append(raw.substr(pos, len));
    pos += len;
  } while (pos < raw.size());
  put_u32be(out, adler32_of(raw));
  return out;
}

template <typename Field, typename ToByte>
std::string grid_png(const Field& field, ToByte&& to_byte) {
  const std::uint32_t w = field.grid.cols;
  const std::uint32_t h = field.grid.rows;
  std::string scanlines;
  scanlines.reserve(static_cast<std::size_t>(h) * (w + 1));
  for (std::uint32_t r = 0; r < h; ++r) {
    scanlines.push_back('\x00');  // filter: none
    for (std::uint32_t c = 0; c < w; ++c) {
      scanlines.push_back(
          static_cast<char>(to_byte(field.data[static_cast<std::size_t>(r) * w + c])));
    }
  }
  std::string out("\x89PNG\r\n\x1a\n", 8);
  std::string ihdr;
  put_u32be(ihdr, w);
  put_u32be(ihdr, h);
  ihdr.push_back('\x08');  // bit depth
  ihdr.push_back('\x00');  // grayscale
  ihdr.push_back('\x00');  // deflate
  ihdr.push_back('\x00');  // filter method
  ihdr.push_back('\x00');  // no interlace
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", stored_zlib(scanlines));
  put_chunk(out, "IEND", {});
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string interval_set_csv(const dyadic_interval_set& set) {
  std::string out = "depth,index\n";
  out.reserve(out.size() + set.size() * 12);
  const std::string depth = std::to_string(set.depth());
  for (std::uint64_t j : set.members()) {
    out += depth;
    out += ',';
    out += std::to_string(j);
    out += '\n';
  }
  return out;
}

std::string step_function_csv(const step_function& f) {
  std::string out = "t,phi\n";
  out.reserve(out.size() + f.values.size() * 24);
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const double t = std::ldexp(static_cast<double>(j), -static_cast<int>(f.depth));
    out += format_double(t);
    out += ',';
    out += format_double(f.values[j]);
    out += '\n';
  }
  return out;
}

std::string plateau_csv(const plateau_histogram& h) {
  std::string out = "length,count\n";
  for (const auto& [len, cnt] : h.counts) {
    out += std::to_string(len);
    out += ',';
    out += std::to_string(cnt);
    out += '\n';
  }
  return out;
}

std::string loglog_csv(const std::vector<std::pair<double, double>>& points) {
  std::string out = "log_length,log_count_plus_1\n";
  out.reserve(out.size() + points.size() * 40);
  for (const auto& [x, y] : points) {
    out += format_double(x);
    out += ',';
    out += format_double(y);
    out += '\n';
  }
  return out;
}

std::string field_csv(const scalar_field& field) {
  return grid_csv(field, [](double v) { return v; });
}

std::string field_csv(const bool_field& field) {
  return grid_csv(field, [](std::uint8_t v) { return v ? 1.0 : 0.0; });
}

std::string field_csv(const julia_mask& mask) {
  return grid_csv(mask, [](std::uint8_t v) { return v ? 1.0 : 0.0; });
}

std::string voxel_csv(const std::vector<mm_voxel>& voxels) {
  std::string out = "re_c0,re_c1,im_c1\n";
  out.reserve(out.size() + voxels.size() * 40);
  for (const mm_voxel& v : voxels) {
    out += format_double(v.re_c0);
    out += ',';
    out += format_double(v.re_c1);
    out += ',';
    out += format_double(v.im_c1);
    out += '\n';
  }
  return out;
}

std::string field_pgm(const scalar_field& field) {
  return grid_pgm(field, scale_byte);
}

std::string field_pgm(const bool_field& field) {
  return grid_pgm(field, [](std::uint8_t v) { return v ? 255 : 0; });
}

std::string field_pgm(const julia_mask& mask) {
  return grid_pgm(mask, [](std::uint8_t v) { return v ? 255 : 0; });
}

std::string field_png(const scalar_field& field) {
  return grid_png(field, scale_byte);
}

std::string field_png(const bool_field& field) {
  return grid_png(field, [](std::uint8_t v) { return v ? 255 : 0; });
}

std::string field_png(const julia_mask& mask) {
  return grid_png(mask, [](std::uint8_t v) { return v ? 255 : 0; });
}

}  // namespace tmset
