import init, { analyzePartition, forest, checkFormula } from "./pkg/ruspini_web.js";

const PRESETS = {
  "complementary pair": {
    n: 2,
    sets: [
      { name: "f", points: [["0", "1"], ["1", "0"]] },
      { name: "not_f", points: [["0", "0"], ["1", "1"]] },
    ],
  },
  "triangular, three sets": {
    n: 3,
    sets: [
      { name: "low", points: [["0", "1"], ["1/2", "0"], ["1", "0"]] },
      { name: "mid", points: [["0", "0"], ["1/2", "1"], ["1", "0"]] },
      { name: "high", points: [["0", "0"], ["1/2", "0"], ["1", "1"]] },
    ],
  },
  "wide overlap": {
    n: 3,
    sets: [
      { name: "a", points: [["0", "1"], ["3/4", "0"], ["1", "0"]] },
      { name: "b", points: [["0", "0"], ["1/2", "1"], ["1", "0"]] },
      { name: "c", points: [["0", "0"], ["1/4", "0"], ["1", "1"]] },
    ],
  },
  "Boolean steps": {
    n: 2,
    sets: [
      { name: "f1", points: [["0", "1"], ["1/2", "1"], ["1/2", "0"], ["1", "0"]] },
      { name: "f2", points: [["0", "0"], ["1/2", "0"], ["1/2", "1"], ["1", "1"]] },
    ],
  },
};

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];
const $ = (id) => document.getElementById(id);
let highlight = new Set();

function num(s) {
  const [p, q] = String(s).split("/");
  return Number(p) / (q === undefined ? 1 : Number(q));
}

function drawCurves(text) {
  const canvas = $("curves");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let p;
  try {
    p = JSON.parse(text);
  } catch {
    return;
  }
  const pad = 20, w = canvas.width - 2 * pad, h = canvas.height - 2 * pad;
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w, h);
  (p.sets || []).forEach((set, i) => {
    ctx.strokeStyle = COLORS[i % COLORS.length];
    ctx.lineWidth = 2;
    ctx.beginPath();
    set.points.forEach(([x, y], j) => {
      const px = pad + num(x) * w, py = pad + (1 - num(y)) * h;
      if (j === 0) ctx.moveTo(px, py); else ctx.lineTo(px, py);
    });
    ctx.stroke();
    ctx.fillStyle = ctx.strokeStyle;
    ctx.fillText(set.name, pad + 4 + 60 * i, pad - 6);
  });
}

function describe(r) {
  const v = (t) => `direct=${t.direct} forest=${t.forest} provable=${t.provable}`;
  return [
    `exact Ruspini: ${r.is_exact_ruspini}`,
    `weak Ruspini: ${r.is_weak_ruspini}`,
    `2-overlapping: ${r.is_2_overlapping}`,
    `F(P): ${r.forest_size} nodes, leaves ${r.leaves.map((c) => c.label).join(", ")}`,
    `weak Ruspini            ${v(r.weak_ruspini)}`,
    `2-overlapping           ${v(r.overlap)}`,
    `both                    ${v(r.overlap_weak_ruspini)}`,
    `G4/Ginf agreement: ${r.g4_ginf_agree}`,
    ``,
    `alpha_P = ${r.alpha_p}`,
  ].join("\n");
}

function runAnalysis() {
  const text = $("partition").value;
  drawCurves(text);
  try {
    const r = JSON.parse(analyzePartition(text));
    $("report").className = "";
    $("report").textContent = describe(r);
    if (r.forest_ids) {
      highlight = new Set(r.forest_ids);
      $("n").value = r.n;
      $("kind").value = "fn";
      drawForest();
    }
  } catch (e) {
    $("report").className = "err";
    $("report").textContent = String(e);
  }
}

function drawForest() {
  const svg = $("forest");
  svg.innerHTML = "";
  let data;
  try {
    data = JSON.parse(forest(Number($("n").value), $("kind").value, Number($("t").value)));
  } catch (e) {
    svg.innerHTML = `<text x="10" y="20" fill="#b00">${e}</text>`;
    return;
  }
  const byId = new Map(data.nodes.map((node) => [node.id, node]));
  const roots = data.nodes.filter((node) => !byId.has(node.parent));
  // leaves get consecutive slots, inner nodes sit above the middle of their children
  let slot = 0;
  const pos = new Map();
  const place = (node) => {
    if (node.children.length === 0) {
      pos.set(node.id, slot++);
    } else {
      const xs = node.children.map((c) => place(byId.get(c)));
      pos.set(node.id, (xs[0] + xs[xs.length - 1]) / 2);
    }
    return pos.get(node.id);
  };
  roots.forEach((r) => { place(r); slot += 0.6; });
  const maxDepth = Math.max(...data.nodes.map((node) => node.depth));
  const width = svg.clientWidth || 1000;
  const dx = width / Math.max(slot, 1), dy = 60;
  const labels = data.n <= 2;
  const height = (maxDepth + 1) * dy + (labels ? 30 : 10);
  svg.setAttribute("height", height);
  const x = (id) => (pos.get(id) + 0.5) * dx, y = (node) => 20 + (node.depth - 1) * dy;
  let out = "";
  for (const node of data.nodes) {
    for (const c of node.children) {
      out += `<line x1="${x(node.id)}" y1="${y(node)}" x2="${x(c)}" y2="${y(byId.get(c))}" stroke="#888"/>`;
    }
  }
  for (const node of data.nodes) {
    const fill = highlight.has(node.id) ? "#1f77b4" : "#fff";
    out += `<circle cx="${x(node.id)}" cy="${y(node)}" r="6" fill="${fill}" stroke="#1f77b4"><title>${node.label}</title></circle>`;
    if (labels) {
      out += `<text x="${x(node.id)}" y="${y(node) + 20}" font-size="11" text-anchor="middle">${node.label}</text>`;
    }
  }
  svg.innerHTML = out;
}

function runCheck() {
  try {
    const r = JSON.parse(checkFormula(Number($("n").value), $("logic").value, $("formula").value));
    $("verdict").className = "";
    $("verdict").textContent = `${r.formula}\n${r.tautology ? "tautology" : "not a tautology"} in ${$("logic").value}`;
    highlight = new Set(r.ids);
    drawForest();
  } catch (e) {
    $("verdict").className = "err";
    $("verdict").textContent = String(e);
  }
}

await init();
for (const name of Object.keys(PRESETS)) {
  $("preset").add(new Option(name, name));
}
const loadPreset = () => {
  $("partition").value = JSON.stringify(PRESETS[$("preset").value], null, 1);
  runAnalysis();
};
$("preset").addEventListener("change", loadPreset);
$("analyze").addEventListener("click", runAnalysis);
$("draw").addEventListener("click", drawForest);
$("check").addEventListener("click", runCheck);
$("partition").addEventListener("input", () => drawCurves($("partition").value));
loadPreset();
