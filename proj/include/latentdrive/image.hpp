#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace latentdrive {

/// Height x width x 3 image, row-major, channel-interleaved, values in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> data;

  Image() = default;
  Image(int h, int w) : height(h), width(w), data(static_cast<std::size_t>(h) * w * 3, 0.0f) {}

  float& at(int r, int c, int ch) { return data[(static_cast<std::size_t>(r) * width + c) * 3 + ch]; }
  float at(int r, int c, int ch) const {
    return data[(static_cast<std::size_t>(r) * width + c) * 3 + ch];
  }
  void set(int r, int c, float red, float green, float blue) {
    float* p = &data[(static_cast<std::size_t>(r) * width + c) * 3];
    p[0] = red;
    p[1] = green;
    p[2] = blue;
  }
  bool operator==(const Image&) const = default;
};

/// Places images on a rows x cols grid (row-major order) with `gap` white pixels
/// between tiles, each tile upscaled by `scale` using nearest neighbour.
Image tile_images(const std::vector<Image>& tiles, int rows, int cols, int scale = 1, int gap = 2);

void write_ppm(const Image& img, const std::string& path);
void write_png(const Image& img, const std::string& path);

}  // namespace latentdrive
