import init, {
  phi1_curve, phi1_point, t_p, t_p_band_curve, sharpness_ratios, sharpness_limit,
} from "./pkg/hardyx_wasm.js";

const $ = (id) => document.getElementById(id);
const REGIMES = ["Möbius–outer", "outer", "both"];

function axes(ctx, w, h, pad, xr, yr, xlabel, ylabel) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#444";
  ctx.beginPath();
  ctx.moveTo(pad, pad);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad, h - pad);
  ctx.stroke();
  ctx.fillText(xlabel, w - pad - 20, h - pad + 24);
  ctx.fillText(ylabel, 4, pad - 8);
  for (const [v, x] of [[xr[0], pad], [xr[1], w - pad]]) ctx.fillText(fmt(v), x - 8, h - pad + 14);
  for (const [v, y] of [[yr[0], h - pad], [yr[1], pad]]) ctx.fillText(fmt(v), 4, y + 4);
  return {
    x: (v) => pad + ((v - xr[0]) / (xr[1] - xr[0])) * (w - 2 * pad),
    y: (v) => h - pad - ((v - yr[0]) / (yr[1] - yr[0])) * (h - 2 * pad),
    inv: (px) => xr[0] + ((px - pad) / (w - 2 * pad)) * (xr[1] - xr[0]),
  };
}

function fmt(v) {
  return Math.abs(v) >= 1e-3 || v === 0 ? (+v.toPrecision(4)).toString() : v.toExponential(2);
}

function polyline(ctx, xs, ys, map, color) {
  ctx.strokeStyle = color;
  ctx.beginPath();
  xs.forEach((x, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, map.x(x), map.y(ys[i])));
  ctx.stroke();
}

function fail(out, e) {
  out.textContent = String(e.message ?? e);
  out.className = "err";
}

// --- Phi_1 curves -----------------------------------------------------------

const N = 401;
const ts = Array.from({ length: N }, (_, i) => i / (N - 1));
let phiMap = null;

function currentP() {
  return $("phi-inf").checked ? Infinity : parseFloat($("phi-p").value);
}

function drawPhi() {
  const p = currentP();
  $("phi-p-val").textContent = p === Infinity ? "∞" : p.toFixed(2);
  const c = $("phi-canvas"), ctx = c.getContext("2d");
  const ys = phi1_curve(p, N);
  const ymax = Math.max(1, ...ys) * 1.05;
  phiMap = axes(ctx, c.width, c.height, 36, [0, 1], [0, ymax], "t", "Φ₁");
  polyline(ctx, ts, ys, phiMap, "#1f5fbf");
  if (p < 1) {
    const tp = t_p(p), x = phiMap.x(tp);
    ctx.strokeStyle = "#c60";
    ctx.setLineDash([4, 4]);
    ctx.beginPath(); ctx.moveTo(x, 36); ctx.lineTo(x, c.height - 36); ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillText("t_p", x + 3, 46);
  }
}

$("phi-canvas").addEventListener("mousemove", (ev) => {
  if (!phiMap) return;
  const rect = ev.target.getBoundingClientRect();
  const t = Math.min(1, Math.max(0, phiMap.inv(ev.clientX - rect.left)));
  try {
    const [v, regime, a, b] = phi1_point(currentP(), t);
    const params = [isNaN(a) ? "" : `α = ${fmt(a)}`, isNaN(b) ? "" : `β = ${fmt(b)}`].filter(Boolean).join(", ");
    $("phi-readout").textContent = `t = ${t.toFixed(4)}, Φ₁ = ${v.toPrecision(10)} (${REGIMES[regime]}; ${params})`;
  } catch (e) {
    fail($("phi-readout"), e);
  }
});

// --- t_p and its band ---------------------------------------------------------

function drawTp() {
  const c = $("tp-canvas"), ctx = c.getContext("2d");
  const flat = t_p_band_curve(255);
  const ps = [], tp = [], lo = [], hi = [];
  for (let i = 0; i < flat.length; i += 4) {
    ps.push(flat[i]); tp.push(flat[i + 1]); lo.push(flat[i + 2]); hi.push(flat[i + 3]);
  }
  const map = axes(ctx, c.width, c.height, 36, [0, 1], [0, 0.6], "p", "t");
  ctx.fillStyle = "rgba(200,120,0,.18)";
  ctx.beginPath();
  ps.forEach((p, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, map.x(p), map.y(hi[i])));
  for (let i = ps.length - 1; i >= 0; i--) ctx.lineTo(map.x(ps[i]), map.y(lo[i]));
  ctx.fill();
  polyline(ctx, ps, tp, map, "#1f5fbf");
  const out = $("tp-readout");
  out.className = "";
  try {
    const p = parseFloat($("tp-p").value);
    const v = t_p(p);
    out.textContent = `t_p = ${v.toPrecision(12)}`;
    ctx.fillStyle = "#b00";
    ctx.beginPath(); ctx.arc(map.x(p), map.y(v), 4, 0, 2 * Math.PI); ctx.fill();
  } catch (e) {
    fail(out, e);
  }
}

// --- Sharpness ratios -----------------------------------------------------------

function drawSharpness() {
  const out = $("sh-readout");
  out.className = "";
  const p = parseFloat($("sh-p").value), k = parseInt($("sh-k").value, 10);
  const exps = Array.from({ length: 13 }, (_, i) => -1 - i * 0.5);
  let ratios;
  try {
    ratios = sharpness_ratios(p, k, Float64Array.from(exps, (e) => 10 ** e));
  } catch (e) {
    fail(out, e);
    return;
  }
  const limit = sharpness_limit(p, k);
  const c = $("sh-canvas"), ctx = c.getContext("2d");
  const map = axes(ctx, c.width, c.height, 36, [exps[0], exps[exps.length - 1]], [1, limit * 1.05], "log₁₀ ε", "ratio");
  polyline(ctx, exps, Array.from(ratios), map, "#1f5fbf");
  polyline(ctx, [exps[0], exps[exps.length - 1]], [limit, limit], map, "#c60");
  out.textContent = `ratio at ε = 1e${exps[exps.length - 1]}: ${ratios[ratios.length - 1].toPrecision(8)}; limit k^(1-p) = ${limit.toPrecision(8)}`;
}

await init();
$("phi-p").addEventListener("input", drawPhi);
$("phi-inf").addEventListener("change", drawPhi);
$("tp-p").addEventListener("input", drawTp);
$("sh-run").addEventListener("click", drawSharpness);
drawPhi();
drawTp();
drawSharpness();
