import { ApiClient } from "./api.js";
import { QuizApp } from "./app.js";

function baseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? "";
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) return;
  const api = new ApiClient(baseUrl());
  const banks = await api.listBanks();
  if (banks.length === 0) {
    root.textContent = "No question banks on the server.";
    return;
  }

  const picker = document.createElement("div");
  picker.className = "bank-picker";
  const title = document.createElement("h1");
  title.textContent = "graphquiz";
  picker.appendChild(title);
  for (const bank of banks) {
    const button = document.createElement("button");
    button.textContent = `${bank.id} (${bank.size} questions)`;
    button.addEventListener("click", () => {
      root.replaceChildren();
      const app = new QuizApp(root, api);
      root.addEventListener("graphquiz:new-session", () => void boot());
      void app.start(bank.id);
    });
    picker.appendChild(button);
  }
  root.replaceChildren(picker);
}

void boot();
