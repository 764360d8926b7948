// Browser bootstrap: pickers for cutting family, engine and side, wired to
// the App controller. Served by the game service alongside /games.

import { ApiClient } from "./api.js";
import { App } from "./app.js";
import { fractionToNumber } from "./fraction.js";
import type { EngineInfo, FamilyInfo } from "./types.js";
import { mount, VNode } from "./view.js";

const api = new ApiClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function setup(): Promise<void> {
  const engineSelect = el<HTMLSelectElement>("engine");
  const familySelect = el<HTMLSelectElement>("family");
  const sideSelect = el<HTMLSelectElement>("side");
  const omegaRow = el<HTMLDivElement>("omega-row");
  const omegaSlider = el<HTMLInputElement>("omega");
  const omegaShown = el<HTMLSpanElement>("omega-value");
  const customInput = el<HTMLInputElement>("custom-sizes");
  const gameRoot = el<HTMLDivElement>("game");

  let engines: EngineInfo[] = [];
  let families: FamilyInfo[] = [];
  try {
    [engines, families] = await Promise.all([api.listEngines(), api.listFamilies()]);
  } catch (err) {
    gameRoot.textContent = `service unreachable: ${err}`;
    return;
  }

  for (const fam of families) {
    const opt = document.createElement("option");
    opt.value = fam.name;
    opt.textContent = `${fam.name} - ${fam.summary}`;
    familySelect.appendChild(opt);
  }
  const custom = document.createElement("option");
  custom.value = "";
  custom.textContent = "custom sizes";
  familySelect.appendChild(custom);

  function refreshEngines(): void {
    const side = sideSelect.value as "alice" | "bob";
    const engineSide = side === "alice" ? "bob" : "alice";
    engineSelect.innerHTML = "";
    for (const engine of engines) {
      if (engine.plays === "both" || engine.plays === engineSide) {
        const opt = document.createElement("option");
        opt.value = engine.name;
        opt.textContent = engine.name;
        engineSelect.appendChild(opt);
      }
    }
  }

  function refreshOmega(): void {
    omegaRow.style.display = familySelect.value === "p15" ? "" : "none";
    customInput.style.display = familySelect.value === "" ? "" : "none";
    omegaShown.textContent = `${omegaSlider.value}/8`;
  }

  sideSelect.addEventListener("change", refreshEngines);
  familySelect.addEventListener("change", refreshOmega);
  omegaSlider.addEventListener("input", refreshOmega);
  refreshEngines();
  refreshOmega();

  const app = new App(api, (tree: VNode) => {
    gameRoot.innerHTML = "";
    gameRoot.appendChild(mount(tree, document));
  });

  el<HTMLButtonElement>("start").addEventListener("click", () => {
    const side = sideSelect.value as "alice" | "bob";
    const family = familySelect.value;
    if (family === "") {
      void app.startGame({
        cutting: customInput.value,
        engine: engineSelect.value,
        human_side: side,
      });
      return;
    }
    const params: Record<string, string> = {};
    if (family === "p15") {
      params.omega = `${omegaSlider.value}/8`;
      void fractionToNumber(params.omega);
    }
    void app.startGame({
      family,
      params,
      engine: engineSelect.value,
      human_side: side,
    });
  });
}

void setup();
