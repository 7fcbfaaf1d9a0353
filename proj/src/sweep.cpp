#include "sweep.hpp"

#include <array>
#include <span>

namespace rbfweno::detail {

void LineScratch::resize(const LineContext& ctx) {
  const size_t cells = static_cast<size_t>(ctx.n + 2 * ctx.g) * static_cast<size_t>(ctx.nvar);
  fplus.resize(cells);
  fminus.resize(cells);
  fhat.resize(static_cast<size_t>(ctx.n + 1) * static_cast<size_t>(ctx.nvar));
}

void split_cells(const LineContext& ctx, const double* u, LineScratch& s, int begin, int end) {
  const int nv = ctx.nvar;
  std::array<double, 4> F{};
  for (int c = begin; c < end; ++c) {
    const size_t off = static_cast<size_t>(c + ctx.g) * static_cast<size_t>(nv);
    std::span<const double> U(u + off, static_cast<size_t>(nv));
    physical_flux(ctx.phys->equation, ctx.dims, ctx.dir, U, ctx.phys->eos, std::span<double>(F.data(), nv));
    for (int v = 0; v < nv; ++v) {
      s.fplus[off + v] = 0.5 * (F[v] + ctx.alpha * U[v]);
      s.fminus[off + v] = 0.5 * (F[v] - ctx.alpha * U[v]);
    }
  }
}

void interface_flux(const LineContext& ctx, const double* u, LineScratch& s, int i, ReconStats& stats) {
  const int k = ctx.cfg->k;
  const int nv = ctx.nvar;
  const int width = 2 * k - 1;
  const Scheme scheme = ctx.cfg->scheme;
  const ReconOptions opts{ctx.cfg->monotone_switch, nullptr};
  double* out = s.fhat.data() + static_cast<size_t>(i + 1) * static_cast<size_t>(nv);

  auto at = [&](const std::vector<double>& a, int cell, int v) {
    return a[static_cast<size_t>(cell + ctx.g) * static_cast<size_t>(nv) + static_cast<size_t>(v)];
  };

  std::array<double, 5> wp{}, wm{};
  if (!ctx.characteristic()) {
    for (int v = 0; v < nv; ++v) {
      for (int m = 0; m < width; ++m) {
        wp[m] = at(s.fplus, i - k + 1 + m, v);
        wm[m] = at(s.fminus, i - k + 2 + m, v);
      }
      const std::span<const double> pw(wp.data(), width), mw(wm.data(), width);
      out[v] = reconstruct_interface(k, scheme, pw, ReconSide::plus, &stats, opts) +
               reconstruct_interface(k, scheme, mw, ReconSide::minus, &stats, opts);
    }
    return;
  }

  const size_t off_l = static_cast<size_t>(i + ctx.g) * static_cast<size_t>(nv);
  const size_t off_r = off_l + static_cast<size_t>(nv);
  const CharBasis basis = roe_basis(std::span<const double>(u + off_l, nv), std::span<const double>(u + off_r, nv),
                                    ctx.phys->eos, ctx.dims, ctx.dir);

  // Characteristic split fluxes on cells i-k+1 .. i+k.
  std::array<std::array<double, 4>, 6> gp{}, gm{};
  for (int m = 0; m < 2 * k; ++m) {
    const int cell = i - k + 1 + m;
    const size_t off = static_cast<size_t>(cell + ctx.g) * static_cast<size_t>(nv);
    char_transform(basis, std::span<const double>(s.fplus.data() + off, nv), gp[m]);
    char_transform(basis, std::span<const double>(s.fminus.data() + off, nv), gm[m]);
  }
  std::array<double, 4> ghat{};
  for (int a = 0; a < nv; ++a) {
    for (int m = 0; m < width; ++m) {
      wp[m] = gp[m][a];
      wm[m] = gm[m + 1][a];
    }
    const std::span<const double> pw(wp.data(), width), mw(wm.data(), width);
    ghat[a] = reconstruct_interface(k, scheme, pw, ReconSide::plus, &stats, opts) +
              reconstruct_interface(k, scheme, mw, ReconSide::minus, &stats, opts);
  }
  char_inverse(basis, std::span<const double>(ghat.data(), nv), std::span<double>(out, nv));
}

void line_tendency(const LineContext& ctx, const LineScratch& s, double inv_dx, double* out, int begin, int end,
                   bool accumulate) {
  const int nv = ctx.nvar;
  for (int c = begin; c < end; ++c) {
    for (int v = 0; v < nv; ++v) {
      const double right = s.fhat[static_cast<size_t>(c + 1) * nv + v];
      const double left = s.fhat[static_cast<size_t>(c) * nv + v];
      const double val = -(right - left) * inv_dx;
      double& dst = out[static_cast<size_t>(c) * nv + v];
      dst = accumulate ? dst + val : val;
    }
  }
}

void sweep_line(const LineContext& ctx, const double* u, LineScratch& s, double inv_dx, double* out, bool accumulate,
                ReconStats& stats) {
  split_cells(ctx, u, s, -ctx.g, ctx.n + ctx.g);
  for (int i = -1; i < ctx.n; ++i) interface_flux(ctx, u, s, i, stats);
  line_tendency(ctx, s, inv_dx, out, 0, ctx.n, accumulate);
}

}  // namespace rbfweno::detail
