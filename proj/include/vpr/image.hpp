#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vpr {

/// 8-bit luma raster, row-major. The universal input of the pipeline.
struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> data;  // width * height samples

    GrayImage() = default;
    GrayImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    bool valid() const {
        return width >= 1 && height >= 1 &&
               data.size() == static_cast<std::size_t>(width) * height;
    }
};

/// ITU-R BT.601 integer luma: round(0.299 R + 0.587 G + 0.114 B).
inline std::uint8_t luma_bt601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

/// Decodes a raster file into a luma image. Binary PGM (P5, maxval <= 255)
/// and non-interlaced 8-bit PNG (grayscale or RGB) are supported. Color
/// inputs are converted with luma_bt601.
GrayImage load_image(const std::string& path);

GrayImage decode_pgm(const std::vector<std::uint8_t>& bytes, const std::string& context);
GrayImage decode_png(const std::vector<std::uint8_t>& bytes, const std::string& context);

/// Canonical binary PGM encoding: "P5\n<w> <h>\n255\n" + samples.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);
void save_pgm(const GrayImage& img, const std::string& path);

/// Ordered downsampled copies of a source image. scale_factor > 1 between
/// consecutive levels; level 0 is the source.
struct Pyramid {
    std::vector<GrayImage> levels;
    double scale_factor = 1.2;
};

/// Box-average downsampling chain. Levels whose width or height would drop
/// below 8 px are suppressed, so fewer than n_levels entries may come back.
Pyramid build_pyramid(const GrayImage& img, std::uint32_t n_levels, double scale_factor);

/// Single box-average downsample to floor(w/s) x floor(h/s).
GrayImage downsample_box(const GrayImage& img, double scale_factor);

}  // namespace vpr
