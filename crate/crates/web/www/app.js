import init, { invariants, ordinarity, scan } from "./pkg/isotriv_web.js";

const examples = {
  "Kummer, p = 7": `p = 7
R = "C2"
genus_base = 0
branch = [1, 0, 0, 0, 1]

[ram]
a2 = 4

[E]
a = 0
b = 1
`,
  "Rational double cover, p = 5": `p = 5
R = "C2"
genus_base = 0

[ram]
a2 = 2

[E]
a = 0
b = 1
`,
  "C4 with III* fibers, p = 13": `p = 13
R = "C4"
genus_base = 0

[ram]
a4m = 2
a2 = 1

[E]
a = 1
b = 0
`,
  "C6 with II and II*, p = 13": `p = 13
R = "C6"
genus_base = 0

[ram]
a6p = 1
a6m = 1
a2 = 2

[E]
a = 0
b = 1
`,
  "E x P1 (scan)": `R = "trivial"
genus_base = 0

[E]
a = 1
b = 1
`,
};

const $ = (id) => document.getElementById(id);
const out = $("output");

function show(text, isError) {
  const pre = document.createElement("pre");
  pre.textContent = text;
  if (isError) pre.className = "error";
  out.replaceChildren(pre);
}

function run(f) {
  try {
    show(f(), false);
  } catch (e) {
    show(String(e), true);
  }
}

function cell(v) {
  const td = document.createElement("td");
  td.textContent = v === null ? "-" : v ? "yes" : "no";
  if (v !== null) td.className = v ? "yes" : "no";
  return td;
}

function scanTable(json) {
  const r = JSON.parse(json);
  const table = document.createElement("table");
  const head = table.insertRow();
  for (const h of ["p", "good", "E ord", "D' ord", "verdict"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.append(th);
  }
  for (const row of r.rows) {
    const tr = table.insertRow();
    if (!row.good) tr.className = "bad";
    const p = document.createElement("td");
    p.textContent = row.p;
    tr.append(p, cell(row.good), cell(row.e_ordinary), cell(row.dp_ordinary), cell(row.verdict));
  }
  const summary = document.createElement("p");
  summary.textContent =
    `${r.ordinary} of ${r.good_primes} good primes ordinary (${r.fraction.toFixed(4)}); ` +
    `E ordinary at ${r.e_ordinary} (${r.e_fraction.toFixed(4)})`;
  out.replaceChildren(summary, table);
}

await init();

for (const name of Object.keys(examples)) {
  $("example").add(new Option(name, name));
}
$("example").onchange = () => { $("spec").value = examples[$("example").value]; };
$("spec").value = examples[Object.keys(examples)[0]];

$("invariants").onclick = () => run(() => invariants($("spec").value));
$("decide").onclick = () => run(() => ordinarity($("spec").value, $("overrides").value));
$("scan").onclick = () => {
  try {
    scanTable(scan($("spec").value, Number($("pmax").value)));
  } catch (e) {
    show(String(e), true);
  }
};

show("Ready.", false);
