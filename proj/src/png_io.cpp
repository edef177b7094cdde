#include "iaa/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>

namespace iaa {

namespace {

// libpng reports errors through longjmp. The helpers below keep every
// non-trivial object in a state struct owned by the caller, so that the
// frame calling setjmp holds only trivially destructible locals.

struct ReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
  char message[256] = {};
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
};

struct WriteState {
  const BinaryMask* mask = nullptr;
  char message[256] = {};
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> row;
};

void on_error(png_structp png, png_const_charp msg) {
  auto* message = static_cast<char*>(png_get_error_ptr(png));
  std::strncpy(message, msg, 255);
  message[255] = '\0';
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

void read_bytes(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<ReadState*>(png_get_io_ptr(png));
  if (state->bytes.size() - state->pos < length) {
    png_error(png, "unexpected end of file");
  }
  std::memcpy(data, state->bytes.data() + state->pos, length);
  state->pos += length;
}

void write_bytes(png_structp png, png_bytep data, png_size_t length) {
  auto* state = static_cast<WriteState*>(png_get_io_ptr(png));
  state->out.insert(state->out.end(), data, data + length);
}

void flush_nothing(png_structp) {}

bool run_decode(ReadState* state) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, state->message, on_error, on_warning);
  if (png == nullptr) {
    std::strcpy(state->message, "cannot allocate decoder");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    std::strcpy(state->message, "cannot allocate decoder");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }

  png_set_read_fn(png, state, read_bytes);
  png_read_info(png, info);
  state->width = png_get_image_width(png, info);
  state->height = png_get_image_height(png, info);

  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  state->channels = png_get_channels(png, info);
  const png_size_t row_bytes = png_get_rowbytes(png, info);
  state->pixels.resize(row_bytes * state->height);
  state->rows.resize(state->height);
  for (png_uint_32 r = 0; r < state->height; ++r) {
    state->rows[r] = state->pixels.data() + r * row_bytes;
  }
  png_read_image(png, state->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

bool run_encode(WriteState* state) {
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, state->message, on_error, on_warning);
  if (png == nullptr) {
    std::strcpy(state->message, "cannot allocate encoder");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    std::strcpy(state->message, "cannot allocate encoder");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }

  const BinaryMask& mask = *state->mask;
  png_set_write_fn(png, state, write_bytes, flush_nothing);
  png_set_IHDR(png, info, static_cast<png_uint_32>(mask.cols()),
               static_cast<png_uint_32>(mask.rows()), 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  state->row.resize(static_cast<std::size_t>(mask.cols()));
  for (Eigen::Index r = 0; r < mask.rows(); ++r) {
    for (Eigen::Index c = 0; c < mask.cols(); ++c) {
      state->row[static_cast<std::size_t>(c)] = mask(r, c) ? 255 : 0;
    }
    png_write_row(png, state->row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

std::uint32_t read_be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) |
         std::uint32_t{p[3]};
}

}  // namespace

BinaryMask decode_mask(std::span<const std::uint8_t> bytes, const std::string& origin) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    throw DecodeError(origin + ": not a PNG file");
  }
  // libpng refuses zero-sized IHDR as a generic error; report it as a dimension problem.
  if (bytes.size() >= 24 && std::memcmp(bytes.data() + 12, "IHDR", 4) == 0) {
    if (read_be32(bytes.data() + 16) == 0 || read_be32(bytes.data() + 20) == 0) {
      throw DimensionError(origin + ": image has zero width or height");
    }
  }

  ReadState state;
  state.bytes = bytes;
  if (!run_decode(&state)) {
    throw DecodeError(origin + ": " + state.message);
  }

  MaskArray cells(static_cast<Eigen::Index>(state.height), static_cast<Eigen::Index>(state.width));
  const int ch = state.channels;
  for (png_uint_32 r = 0; r < state.height; ++r) {
    const std::uint8_t* px = state.rows[r];
    for (png_uint_32 c = 0; c < state.width; ++c, px += ch) {
      int luma = px[0];
      if (ch >= 3) {
        luma = (299 * px[0] + 587 * px[1] + 114 * px[2] + 500) / 1000;
      }
      cells(r, c) = luma > kForegroundThreshold;
    }
  }
  return BinaryMask(std::move(cells));
}

std::vector<std::uint8_t> encode_mask(const BinaryMask& mask) {
  WriteState state;
  state.mask = &mask;
  if (!run_encode(&state)) {
    throw IoError(std::string("PNG encoding failed: ") + state.message);
  }
  return std::move(state.out);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path);
}

BinaryMask read_mask(const std::string& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  return decode_mask(bytes, path);
}

void write_mask(const std::string& path, const BinaryMask& mask) {
  write_file(path, encode_mask(mask));
}

}  // namespace iaa
