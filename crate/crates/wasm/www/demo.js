import init, { catalog_names, gibbs_partial_sum, heat_profile, staircase } from "./pkg/resum_wasm.js";

const $ = (id) => document.getElementById(id);

function plot(canvas, series, yRange) {
  const ctx = canvas.getContext("2d");
  const { width, height } = canvas;
  const pad = 36;
  ctx.clearRect(0, 0, width, height);
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y)).filter(Number.isFinite);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = yRange ?? [Math.min(...ys), Math.max(...ys)];
  if (y1 - y0 < 1e-12) { y0 -= 0.5; y1 += 0.5; }
  const sx = (x) => pad + ((x - x0) / (x1 - x0 || 1)) * (width - 2 * pad);
  const sy = (y) => height - pad - ((y - y0) / (y1 - y0)) * (height - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  ctx.beginPath();
  ctx.moveTo(pad, pad); ctx.lineTo(pad, height - pad); ctx.lineTo(width - pad, height - pad);
  ctx.stroke();
  ctx.fillText(y1.toPrecision(4), 2, pad);
  ctx.fillText(y0.toPrecision(4), 2, height - pad);
  ctx.fillText(x0.toPrecision(3), pad, height - pad + 14);
  ctx.fillText(x1.toPrecision(3), width - pad - 24, height - pad + 14);

  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.fillStyle = s.color;
    ctx.beginPath();
    s.points.forEach((p, i) => {
      const y = Math.min(Math.max(p.y, y0), y1);
      if (s.dots) {
        ctx.fillRect(sx(p.x) - 2, sy(y) - 2, 4, 4);
      } else if (i === 0) {
        ctx.moveTo(sx(p.x), sy(y));
      } else {
        ctx.lineTo(sx(p.x), sy(y));
      }
    });
    if (!s.dots) ctx.stroke();
  }
}

function guarded(errorId, fn) {
  return () => {
    try {
      $(errorId).textContent = "";
      fn();
    } catch (e) {
      $(errorId).textContent = String(e.message ?? e);
    }
  };
}

const renderStaircase = guarded("st-error", () => {
  const rows = JSON.parse(staircase($("st-series").value, $("st-z").value, Number($("st-depth").value)));
  const upper = rows.filter((r) => r.n === r.m).map((r) => ({ x: r.n, y: r.value }));
  const lower = rows.filter((r) => r.m === r.n + 1).map((r) => ({ x: r.n, y: r.value }));
  const tail = rows.slice(2).map((r) => r.value);
  const range = tail.length ? [Math.min(...tail), Math.max(...tail)] : undefined;
  plot($("st-plot"), [
    { points: upper, color: "#c33", dots: true },
    { points: lower, color: "#36c", dots: true },
  ], range);
  $("st-table").innerHTML = "<tr><th>approximant</th><th>exact</th><th>value</th></tr>" + rows
    .map((r) => `<tr><td>${r.label}</td><td>${r.exact ?? ""}</td><td>${r.value.toPrecision(12)}</td></tr>`)
    .join("");
});

const renderHeat = guarded("ht-error", () => {
  const t = 10 ** Number($("ht-t").value);
  $("ht-t-value").textContent = t.toPrecision(3);
  const pts = JSON.parse(heat_profile(
    $("ht-f").value, $("ht-g").value, $("ht-h").value,
    Number($("ht-modes").value), t, $("ht-accel").checked, 200,
  ));
  plot($("ht-plot"), [{ points: pts, color: "#c33" }]);
});

const renderGibbs = guarded("gb-error", () => {
  const terms = Number($("gb-terms").value);
  $("gb-terms-value").textContent = terms;
  const curves = JSON.parse(gibbs_partial_sum($("gb-f").value, terms, 600));
  $("gb-boundary").textContent = `boundary term: ${curves.boundary}`;
  plot($("gb-plot"), [
    { points: curves.plain, color: "#c33" },
    { points: curves.accelerated, color: "#36c" },
  ]);
});

await init();
for (const name of JSON.parse(catalog_names())) {
  if (name.includes("<")) continue;
  const option = new Option(name, name, name === "euler-factorial", name === "euler-factorial");
  $("st-series").add(option);
}
for (const id of ["st-series", "st-z", "st-depth"]) $(id).addEventListener("input", renderStaircase);
for (const id of ["ht-f", "ht-g", "ht-h", "ht-modes", "ht-t", "ht-accel"]) $(id).addEventListener("input", renderHeat);
for (const id of ["gb-f", "gb-terms"]) $(id).addEventListener("input", renderGibbs);
renderStaircase();
renderHeat();
renderGibbs();
