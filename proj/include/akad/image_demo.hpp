#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace akad {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<size_t>(row) * width + col];
    }
};

// Binary PGM, maxval 255. Anything else raises ParseError.
GrayImage read_pgm(const std::string& path);
void write_pgm(const std::string& path, const GrayImage& image);

struct DemoMetrics {
    double max_abs_error = 0.0;  // pre-quantization, against the direct K image
    double psnr_db = 0.0;        // post-quantization; +inf when byte-exact
    long blocks = 0;
    int levels = 0;
};

struct DemoResult {
    GrayImage output;
    DemoMetrics metrics;
    Eigen::MatrixXd pre_quant;  // reconstructed image before rounding
    Eigen::MatrixXd reference;  // K applied directly to the image
    bool padded = false;
};

// Per block: vectorize, analyze with the chosen frame, apply the operator in
// coefficient or signal space, synthesize level by level.
//   frame "orthonormal-dct":      block x block 2-D DCT-II, levels m_n = n*block
//   frame "mercedes-overcomplete": horizontal pixel pairs, one level of the
//                                  three-vector tight frame (block ignored)
//   operator "identity" | "drop-first-coefficient" | "blur3"
// blur3 applies the kernel [1,2,1]/4 row-wise inside each block with edge
// clamping, in signal space before analysis.
DemoResult run_image_demo(const GrayImage& input, int block, const std::string& op,
                          const std::string& frame);

// {"max_abs_error":..., "psnr_db":..., "blocks":..., "levels":...};
// psnr_db serializes as null when infinite.
std::string metrics_json(const DemoMetrics& metrics);

}  // namespace akad
