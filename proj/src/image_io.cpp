#include "openspace/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace openspace {
namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const fs::path& path, const std::string& cause) {
  throw Error(path.string() + ": " + cause);
}

std::string lower_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

std::vector<unsigned char> read_bytes(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) fail(path, "file not found");
  if (fs::is_directory(path, ec)) fail(path, "is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Decoded pixels, either one or three channels per pixel.
struct Decoded {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;
};

Decoded decode_png(const fs::path& path, const std::vector<unsigned char>& bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    fail(path, std::string("corrupt PNG: ") + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  Decoded out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.channels = color ? 3 : 1;
  out.data.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.data.data(), 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    fail(path, "corrupt PNG: " + msg);
  }
  return out;
}

// Plain-text PNM token stream; '#' starts a comment running to end of line.
class PnmTokens {
 public:
  PnmTokens(const fs::path& path, const std::vector<unsigned char>& bytes)
      : path_(path), text_(bytes.begin(), bytes.end()) {}

  std::string next() {
    skip_space_and_comments();
    if (pos_ >= text_.size()) fail(path_, "truncated PNM data");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '#') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  long number() {
    const std::string tok = next();
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
      fail(path_, "corrupt PNM: expected a number, got '" + tok + "'");
    }
    return std::stol(tok);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const fs::path& path_;
  std::string text_;
  std::size_t pos_ = 0;
};

Decoded decode_pnm(const fs::path& path, const std::vector<unsigned char>& bytes) {
  PnmTokens tokens(path, bytes);
  const std::string magic = tokens.next();
  Decoded out;
  if (magic == "P2") {
    out.channels = 1;
  } else if (magic == "P3") {
    out.channels = 3;
  } else {
    fail(path, "unsupported PNM variant '" + magic + "' (only P2 and P3)");
  }
  const long width = tokens.number();
  const long height = tokens.number();
  const long maxval = tokens.number();
  if (width < 1 || height < 1 || width > 65535 || height > 65535) fail(path, "corrupt PNM: bad dimensions");
  if (maxval < 1 || maxval > 65535) fail(path, "corrupt PNM: bad maxval");
  out.width = static_cast<int>(width);
  out.height = static_cast<int>(height);
  const std::size_t n = static_cast<std::size_t>(width) * height * out.channels;
  out.data.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long v = tokens.number();
    if (v > maxval) fail(path, "corrupt PNM: sample exceeds maxval");
    out.data[i] = static_cast<std::uint8_t>(maxval == 255 ? v : (v * 255 + maxval / 2) / maxval);
  }
  return out;
}

Decoded decode(const fs::path& path) {
  const auto bytes = read_bytes(path);
  static constexpr unsigned char kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::equal(std::begin(kPngSig), std::end(kPngSig), bytes.begin())) {
    return decode_png(path, bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') return decode_pnm(path, bytes);
  fail(path, "unsupported image format");
}

void write_png(const fs::path& path, int width, int height, bool color, const void* data) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(width);
  image.height = static_cast<png_uint_32>(height);
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&image, path.string().c_str(), 0, data, 0, nullptr)) {
    const std::string msg = image.message;
    png_image_free(&image);
    fail(path, "cannot write PNG: " + msg);
  }
}

void write_pnm(const fs::path& path, int width, int height, int channels, const std::uint8_t* data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << (channels == 1 ? "P2" : "P3") << '\n' << width << ' ' << height << "\n255\n";
  const std::size_t per_row = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* row = data + per_row * y;
    for (std::size_t i = 0; i < per_row; ++i) {
      if (i) out << ' ';
      out << static_cast<int>(row[i]);
    }
    out << '\n';
  }
  if (!out) fail(path, "write failed");
}

void write_image(const fs::path& path, int width, int height, int channels, const std::uint8_t* data) {
  const std::string ext = lower_extension(path);
  if (ext == ".png") {
    write_png(path, width, height, channels == 3, data);
  } else if (ext == ".pgm" || ext == ".ppm") {
    if ((ext == ".pgm") != (channels == 1)) {
      fail(path, channels == 1 ? "gray image needs .pgm or .png" : "color image needs .ppm or .png");
    }
    write_pnm(path, width, height, channels, data);
  } else {
    fail(path, "unsupported output extension '" + ext + "'");
  }
}

ColorRaster to_color(const Decoded& d) {
  ColorRaster out(d.width, d.height);
  auto px = out.values();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (d.channels == 3) {
      px[i] = Rgb{d.data[3 * i], d.data[3 * i + 1], d.data[3 * i + 2]};
    } else {
      px[i] = Rgb{d.data[i], d.data[i], d.data[i]};
    }
  }
  return out;
}

}  // namespace

ColorRaster load_color(const fs::path& path) { return to_color(decode(path)); }

GrayRaster load_gray(const fs::path& path) {
  Decoded d = decode(path);
  if (d.channels == 1) return GrayRaster(d.width, d.height, std::move(d.data));
  return to_gray(to_color(d));
}

BinaryMask load_mask(const fs::path& path) {
  const GrayRaster gray = load_gray(path);
  BinaryMask mask(gray.width(), gray.height());
  std::transform(gray.values().begin(), gray.values().end(), mask.values().begin(),
                 [](std::uint8_t v) -> std::uint8_t { return v ? 1 : 0; });
  return mask;
}

void save_color(const ColorRaster& img, const fs::path& path) {
  static_assert(sizeof(Rgb) == 3);
  write_image(path, img.width(), img.height(), 3, reinterpret_cast<const std::uint8_t*>(img.values().data()));
}

void save_gray(const GrayRaster& img, const fs::path& path) {
  write_image(path, img.width(), img.height(), 1, img.values().data());
}

void save_mask(const BinaryMask& mask, const fs::path& path) { save_gray(mask_to_gray(mask), path); }

}  // namespace openspace
