#!/usr/bin/env python3
"""Regenerate the shipped locale packs from the translation tables below.

This script is the authoring source for src/problingo/locales/. Run it after
editing any translation; the JSON files it writes are what the package loads
at runtime. English packs are native_validated; all other languages ship as
machine_translated until a native speaker signs them off.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
LOCALES = ROOT / "src" / "problingo" / "locales"

LANGUAGES = ["en", "zh", "de", "es", "fr", "it", "pt", "ru", "ja", "ko", "th", "bn", "te", "sw"]

CONVENTIONS: dict[str, dict[str, str]] = {
    "en": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": "."},
    "zh": {"list_separator": "、", "question_mark": "？", "sentence_terminator": "。", "decimal_point": "."},
    "de": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": ","},
    "es": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": ","},
    "fr": {"list_separator": ", ", "question_mark": " ?", "sentence_terminator": ".", "decimal_point": ","},
    "it": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": ","},
    "pt": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": ","},
    "ru": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": ","},
    "ja": {"list_separator": "、", "question_mark": "？", "sentence_terminator": "。", "decimal_point": "."},
    "ko": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": "."},
    # Thai, Bengali, Telugu, and Swahili conventions were chosen by the
    # maintainers, not validated by native typographers: ASCII comma lists
    # and question marks (modern usage), Bengali danda as terminator.
    "th": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": "."},
    "bn": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": "।", "decimal_point": "."},
    "te": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": "."},
    "sw": {"list_separator": ", ", "question_mark": "?", "sentence_terminator": ".", "decimal_point": "."},
}

# ---------------------------------------------------------------------------
# Question templates. {name} substitutes a binding; {?} renders the pack's
# question mark. Multiple variants are allowed; translations may supply fewer
# variants than English.
# ---------------------------------------------------------------------------

TEMPLATES: dict[str, dict[str, list[str]]] = {}

TEMPLATES["gcd"] = {
    "en": ["Find the Greatest Common Divisor (GCD) of these numbers: {numbers}. Give only the GCD as your final answer."],
    "zh": ["求出这些数的最大公约数（GCD）：{numbers}。最终答案只需给出最大公约数。"],
    "de": ["Bestimme den größten gemeinsamen Teiler (ggT) von diesen Zahlen: {numbers}. Gib nur den ggT als Antwort an."],
    "es": ["Encuentra el máximo común divisor (MCD) de estos números: {numbers}. Da únicamente el MCD como respuesta final."],
    "fr": ["Trouve le plus grand commun diviseur (PGCD) de ces nombres : {numbers}. Donne uniquement le PGCD comme réponse finale."],
    "it": ["Trova il massimo comune divisore (MCD) di questi numeri: {numbers}. Fornisci solo il MCD come risposta finale."],
    "pt": ["Encontre o máximo divisor comum (MDC) destes números: {numbers}. Dê apenas o MDC como resposta final."],
    "ru": ["Найдите наибольший общий делитель (НОД) этих чисел: {numbers}. В качестве окончательного ответа укажите только НОД."],
    "ja": ["次の数の最大公約数（GCD）を求めよ：{numbers}。最終回答として最大公約数のみを答えること。"],
    "ko": ["다음 수들의 최대공약수(GCD)를 구하세요: {numbers}. 최종 답으로 최대공약수만 적으세요."],
    "th": ["จงหาตัวหารร่วมมาก (ห.ร.ม.) ของจำนวนเหล่านี้: {numbers} ให้ตอบเฉพาะ ห.ร.ม. เป็นคำตอบสุดท้าย"],
    "bn": ["এই সংখ্যাগুলির গরিষ্ঠ সাধারণ গুণনীয়ক (গসাগু) নির্ণয় করুন: {numbers}। চূড়ান্ত উত্তর হিসেবে শুধু গসাগু দিন।"],
    "te": ["ఈ సంఖ్యల గరిష్ఠ సామాన్య భాజకాన్ని (గసాభా) కనుగొనండి: {numbers}. తుది సమాధానంగా గసాభా మాత్రమే ఇవ్వండి."],
    "sw": ["Tafuta kigawo kikuu cha shirika (GCD) cha nambari hizi: {numbers}. Toa GCD pekee kama jibu lako la mwisho."],
}

TEMPLATES["count_bits"] = {
    "en": ["How many 1 bits are there in the binary representation of the number {number}{?}"],
    "zh": ["数字{number}的二进制表示中有多少个1位{?}"],
    "de": ["Wie viele 1-Bits enthält die Binärdarstellung der Zahl {number}{?}"],
    "es": ["¿Cuántos bits 1 hay en la representación binaria del número {number}{?}"],
    "fr": ["Combien de bits à 1 y a-t-il dans la représentation binaire du nombre {number}{?}"],
    "it": ["Quanti bit 1 ci sono nella rappresentazione binaria del numero {number}{?}"],
    "pt": ["Quantos bits 1 existem na representação binária do número {number}{?}"],
    "ru": ["Сколько единичных битов в двоичном представлении числа {number}{?}"],
    "ja": ["2進数における数値{number}の1ビットの個数を求めよ。"],
    "ko": ["숫자 {number}의 이진 표현에는 1 비트가 몇 개 있습니까{?}"],
    "th": ["ในการเขียนเลข {number} ในระบบเลขฐานสอง มีบิตที่เป็น 1 กี่บิต{?}"],
    "bn": ["{number} সংখ্যাটির বাইনারি রূপে কতটি 1 বিট আছে{?}"],
    "te": ["{number} సంఖ్య యొక్క బైనరీ రూపంలో ఎన్ని 1 బిట్లు ఉన్నాయి{?}"],
    "sw": ["Kuna biti ngapi za 1 katika uwakilishi wa nambari {number} katika mfumo wa binary{?}"],
}

TEMPLATES["chain_sum"] = {
    "en": [
        "Calculate {expression}. Give only the final value as your answer.",
        "What is the value of {expression}{?} Give only the final value as your answer.",
    ],
    "zh": ["计算 {expression} 的结果。只需给出最终数值。"],
    "de": ["Berechne {expression}. Gib nur den Endwert als Antwort an."],
    "es": ["Calcula {expression}. Da solo el valor final como respuesta."],
    "fr": ["Calcule {expression}. Donne uniquement la valeur finale comme réponse."],
    "it": ["Calcola {expression}. Fornisci solo il valore finale come risposta."],
    "pt": ["Calcule {expression}. Dê apenas o valor final como resposta."],
    "ru": ["Вычислите {expression}. В ответе укажите только итоговое значение."],
    "ja": ["{expression} を計算せよ。最終的な値のみを答えること。"],
    "ko": ["{expression} 를 계산하세요. 최종 값만 답하세요."],
    "th": ["จงคำนวณ {expression} ให้ตอบเฉพาะค่าสุดท้ายเท่านั้น"],
    "bn": ["{expression} এর মান নির্ণয় করুন। উত্তর হিসেবে শুধু চূড়ান্ত মানটি দিন।"],
    "te": ["{expression} ను లెక్కించండి. సమాధానంగా తుది విలువను మాత్రమే ఇవ్వండి."],
    "sw": ["Kokotoa {expression}. Toa thamani ya mwisho pekee kama jibu."],
}

TEMPLATES["leg_counting"] = {
    "en": ["How many legs are there in total if you have the following animals{?} {animals}. Give only the total number of legs as your answer."],
    "zh": ["如果有以下动物，总共有多少条腿{?}{animals}。只需给出腿的总数。"],
    "de": ["Wie viele Beine gibt es insgesamt bei den folgenden Tieren{?} {animals}. Gib nur die Gesamtzahl der Beine als Antwort an."],
    "es": ["¿Cuántas patas hay en total con los siguientes animales{?} {animals}. Da solo el número total de patas como respuesta."],
    "fr": ["Combien de pattes y a-t-il au total avec les animaux suivants{?} {animals}. Donne uniquement le nombre total de pattes comme réponse."],
    "it": ["Quante zampe ci sono in totale con i seguenti animali{?} {animals}. Fornisci solo il numero totale di zampe come risposta."],
    "pt": ["Quantas patas há no total com os seguintes animais{?} {animals}. Dê apenas o número total de patas como resposta."],
    "ru": ["Сколько всего ног у следующих животных{?} {animals}. В ответе укажите только общее число ног."],
    "ja": ["次の動物がいるとき、足は全部で何本か{?}{animals}。足の合計本数のみを答えること。"],
    "ko": ["다음 동물들이 있을 때 다리는 모두 몇 개입니까{?} {animals}. 다리의 총 개수만 답하세요."],
    "th": ["ถ้ามีสัตว์ต่อไปนี้ จะมีขารวมกันทั้งหมดกี่ขา{?} {animals} ให้ตอบเฉพาะจำนวนขารวมเท่านั้น"],
    "bn": ["নিচের প্রাণীগুলি থাকলে মোট কতটি পা আছে{?} {animals}। উত্তর হিসেবে শুধু পায়ের মোট সংখ্যা দিন।"],
    "te": ["కింది జంతువులు ఉంటే మొత్తం ఎన్ని కాళ్లు ఉంటాయి{?} {animals}. సమాధానంగా కాళ్ల మొత్తం సంఖ్యను మాత్రమే ఇవ్వండి."],
    "sw": ["Kuna miguu mingapi kwa jumla ukiwa na wanyama wafuatao{?} {animals}. Toa jumla ya miguu pekee kama jibu."],
}

TEMPLATES["number_sequence"] = {
    "en": ["{terms}, {?}"],
    "zh": ["{terms}、{?}"],
    "de": ["Setze die Zahlenfolge fort: {terms}, {?}"],
    "es": ["Continúa la secuencia numérica: {terms}, {?}"],
    "fr": ["Continue la suite de nombres : {terms}, {?}"],
    "it": ["Continua la sequenza numerica: {terms}, {?}"],
    "pt": ["Continue a sequência numérica: {terms}, {?}"],
    "ru": ["Продолжите числовую последовательность: {terms}, {?}"],
    "ja": ["{terms}、{?}"],
    "ko": ["다음 수열을 이어가세요: {terms}, {?}"],
    "th": ["จงต่อลำดับจำนวนต่อไปนี้: {terms}, {?}"],
    "bn": ["সংখ্যার ধারাটি সম্পূর্ণ করুন: {terms}, {?}"],
    "te": ["సంఖ్యా శ్రేణిని కొనసాగించండి: {terms}, {?}"],
    "sw": ["Endeleza mfuatano wa nambari: {terms}, {?}"],
}

TEMPLATES["simple_equations"] = {
    "en": ["Solve for x: {equation}. Give only the value of x as your answer."],
    "zh": ["解方程 {equation}，求 x。只需给出 x 的值。"],
    "de": ["Löse nach x auf: {equation}. Gib nur den Wert von x als Antwort an."],
    "es": ["Resuelve para x: {equation}. Da solo el valor de x como respuesta."],
    "fr": ["Résous pour x : {equation}. Donne uniquement la valeur de x comme réponse."],
    "it": ["Risolvi per x: {equation}. Fornisci solo il valore di x come risposta."],
    "pt": ["Resolva para x: {equation}. Dê apenas o valor de x como resposta."],
    "ru": ["Решите уравнение относительно x: {equation}. В ответе укажите только значение x."],
    "ja": ["方程式 {equation} を x について解け。x の値のみを答えること。"],
    "ko": ["x에 대해 방정식을 푸세요: {equation}. x의 값만 답하세요."],
    "th": ["จงแก้สมการหา x: {equation} ให้ตอบเฉพาะค่าของ x เท่านั้น"],
    "bn": ["x এর জন্য সমাধান করুন: {equation}। উত্তর হিসেবে শুধু x এর মান দিন।"],
    "te": ["x కోసం సాధించండి: {equation}. సమాధానంగా x విలువను మాత్రమే ఇవ్వండి."],
    "sw": ["Tatua kupata x: {equation}. Toa thamani ya x pekee kama jibu."],
}

TEMPLATES["isomorphic_strings"] = {
    "en": ["Return {true_token} if the following two strings are isomorphic, or {false_token} otherwise: {s1} {s2}"],
    "zh": ["如果下面两个字符串是同构的，请返回{true_token}，否则返回{false_token}：「{s1}」「{s2}」"],
    "de": ["Gib {true_token} zurück, wenn die folgenden beiden Zeichenketten isomorph sind, andernfalls {false_token}: {s1} {s2}"],
    "es": ["Devuelve {true_token} si las siguientes dos cadenas son isomorfas, de lo contrario {false_token}: {s1} {s2}"],
    "fr": ["Renvoie {true_token} si les deux chaînes suivantes sont isomorphes, sinon {false_token} : {s1} {s2}"],
    "it": ["Restituisci {true_token} se le seguenti due stringhe sono isomorfe, altrimenti {false_token}: {s1} {s2}"],
    "pt": ["Retorne {true_token} se as duas cadeias a seguir forem isomorfas, caso contrário {false_token}: {s1} {s2}"],
    "ru": ["Верните {true_token}, если следующие две строки изоморфны, иначе {false_token}: «{s1}» «{s2}»"],
    "ja": ["次の2つの文字列が同型ならば{true_token}を、そうでなければ{false_token}を返せ：「{s1}」「{s2}」"],
    "ko": ['다음 두 문자열이 동형이면 {true_token}을, 아니면 {false_token}을 답하세요: "{s1}" "{s2}"'],
    "th": ['ถ้าสตริงสองสตริงต่อไปนี้เป็นไอโซมอร์ฟิก ให้ตอบ {true_token} ถ้าไม่ใช่ให้ตอบ {false_token}: "{s1}" "{s2}"'],
    "bn": ['নিচের দুটি স্ট্রিং আইসোমরফিক হলে {true_token} দিন, না হলে {false_token}: "{s1}" "{s2}"'],
    "te": ['కింది రెండు స్ట్రింగులు ఐసోమార్ఫిక్ అయితే {true_token} అని, లేకపోతే {false_token} అని సమాధానం ఇవ్వండి: "{s1}" "{s2}"'],
    "sw": ["Jibu {true_token} ikiwa mifuatano miwili ifuatayo ni isomofiki, la sivyo jibu {false_token}: {s1} {s2}"],
}

TEMPLATES["spell_backward"] = {
    "en": ["Spell this English word backward (example: sun -> nus): {word}"],
    "zh": ["把这个英文单词倒着拼写出来（例如：sun -> nus）：「{word}」"],
    "de": ["Buchstabiere dieses englische Wort rückwärts (Beispiel: sun -> nus): {word}"],
    "es": ["Escribe esta palabra en inglés al revés (ejemplo: sol -> los): {word}"],
    "fr": ["Épelle ce mot anglais à l'envers (exemple : sun -> nus) : {word}"],
    "it": ["Scrivi questa parola inglese al contrario (esempio: sole -> elos): {word}"],
    "pt": ["Soletre esta palavra em inglês de trás para frente (exemplo: sol -> los): {word}"],
    "ru": ["Напишите это английское слово задом наперёд (пример: sun -> nus): «{word}»"],
    "ja": ["この英語の単語を逆から綴れ（例：sun -> nus）：「{word}」"],
    "ko": ['이 영어 단어를 거꾸로 쓰세요 (예: "sun" -> "nus"): "{word}"'],
    "th": ['จงสะกดคำภาษาอังกฤษนี้ย้อนกลับ (ตัวอย่าง: "sun" -> "nus"): "{word}"'],
    "bn": ['এই ইংরেজি শব্দটি উল্টো করে বানান করুন (উদাহরণ: "sun" -> "nus"): "{word}"'],
    "te": ['ఈ ఆంగ్ల పదాన్ని వెనుక నుండి రాయండి (ఉదాహరణ: "sun" -> "nus"): "{word}"'],
    "sw": ["Andika neno hili la Kiingereza kinyumenyume (mfano: sun -> nus): {word}"],
}

TEMPLATES["letter_counting"] = {
    "en": ['How many times does the letter "{letter}" appear in the following English text: "{text}"{?}'],
    "zh": ["在英文文本「{text}」中，字母「{letter}」出现了多少次{?}"],
    "de": ['Wie oft kommt der Buchstabe "{letter}" im folgenden englischen Text vor: "{text}"{?}'],
    "es": ['¿Cuántas veces aparece la letra "{letter}" en el siguiente texto en inglés: "{text}"{?}'],
    "fr": ['Combien de fois la lettre "{letter}" apparaît-elle dans le texte anglais suivant : "{text}"{?}'],
    "it": ['Quante volte compare la lettera "{letter}" nel seguente testo in inglese: "{text}"{?}'],
    "pt": ['Quantas vezes a letra "{letter}" aparece no seguinte texto em inglês: "{text}"{?}'],
    "ru": ["Сколько раз буква «{letter}» встречается в следующем английском тексте: «{text}»{?}"],
    "ja": ["英語のテキスト「{text}」の中に文字「{letter}」は何回現れるか{?}"],
    "ko": ['다음 영어 텍스트 "{text}"에서 문자 "{letter}"는 몇 번 나타납니까{?}'],
    "th": ['ตัวอักษร "{letter}" ปรากฏในข้อความภาษาอังกฤษ "{text}" กี่ครั้ง{?}'],
    "bn": ['নিচের ইংরেজি লেখা "{text}" এ "{letter}" অক্ষরটি কতবার এসেছে{?}'],
    "te": ['కింది ఆంగ్ల వాక్యం "{text}" లో "{letter}" అక్షరం ఎన్నిసార్లు వచ్చింది{?}'],
    "sw": ['Herufi "{letter}" inaonekana mara ngapi katika maandishi yafuatayo ya Kiingereza: "{text}"{?}'],
}

_ANAGRAM_EXAMPLE = '[["eat", "tea"], ["cat"]]'

TEMPLATES["group_anagrams"] = {
    "en": [f"An anagram is a word formed by rearranging the letters of another word, using all the original letters exactly once. Group the following list of English words into anagrams: {{words}}. Answer with a JSON list of lists, for example {_ANAGRAM_EXAMPLE}."],
    "zh": [f"变位词是通过重新排列另一个单词的字母而构成的单词。请将下面的英文单词列表按变位词分组：{{words}}。请以JSON列表的列表形式作答，例如 {_ANAGRAM_EXAMPLE}。"],
    "de": [f"Ein Anagramm ist ein Wort, das durch Umstellen der Buchstaben eines anderen Wortes entsteht. Gruppiere die folgende Liste englischer Wörter in Anagramme: {{words}}. Antworte mit einer JSON-Liste von Listen, zum Beispiel {_ANAGRAM_EXAMPLE}."],
    "es": [f"Un anagrama es una palabra formada reordenando las letras de otra palabra. Agrupa la siguiente lista de palabras en inglés en anagramas: {{words}}. Responde con una lista JSON de listas, por ejemplo {_ANAGRAM_EXAMPLE}."],
    "fr": [f"Une anagramme est un mot formé en réarrangeant les lettres d'un autre mot. Regroupe la liste suivante de mots anglais en anagrammes : {{words}}. Réponds avec une liste JSON de listes, par exemple {_ANAGRAM_EXAMPLE}."],
    "it": [f"Un anagramma è una parola formata riordinando le lettere di un'altra parola. Raggruppa il seguente elenco di parole inglesi in anagrammi: {{words}}. Rispondi con una lista JSON di liste, ad esempio {_ANAGRAM_EXAMPLE}."],
    "pt": [f"Um anagrama é uma palavra formada reorganizando as letras de outra palavra. Agrupe a seguinte lista de palavras em inglês em anagramas: {{words}}. Responda com uma lista JSON de listas, por exemplo {_ANAGRAM_EXAMPLE}."],
    "ru": [f"Анаграмма — это слово, образованное перестановкой букв другого слова. Сгруппируйте следующий список английских слов в анаграммы: {{words}}. Ответьте JSON-списком списков, например {_ANAGRAM_EXAMPLE}."],
    "ja": [f"アナグラムとは、別の単語の文字を並べ替えてできる単語である。次の英単語のリストをアナグラムごとに分類せよ：{{words}}。答えはJSONのリストのリストで示すこと。例：{_ANAGRAM_EXAMPLE}"],
    "ko": [f"애너그램은 다른 단어의 글자를 재배열하여 만든 단어입니다. 다음 영어 단어 목록을 애너그램끼리 묶으세요: {{words}}. JSON 리스트의 리스트로 답하세요. 예: {_ANAGRAM_EXAMPLE}"],
    "th": [f"แอนาแกรมคือคำที่เกิดจากการสลับตัวอักษรของคำอื่น จงจัดกลุ่มรายการคำภาษาอังกฤษต่อไปนี้เป็นแอนาแกรม: {{words}} ตอบเป็นลิสต์ JSON ของลิสต์ เช่น {_ANAGRAM_EXAMPLE}"],
    "bn": [f"অ্যানাগ্রাম হল অন্য একটি শব্দের অক্ষর সাজিয়ে তৈরি শব্দ। নিচের ইংরেজি শব্দের তালিকাটি অ্যানাগ্রাম অনুযায়ী দলবদ্ধ করুন: {{words}}। JSON লিস্টের লিস্ট আকারে উত্তর দিন, যেমন {_ANAGRAM_EXAMPLE}।"],
    "te": [f"అనాగ్రామ్ అంటే మరొక పదంలోని అక్షరాలను మార్చి అమర్చడం ద్వారా ఏర్పడే పదం. కింది ఆంగ్ల పదాల జాబితాను అనాగ్రామ్‌ల వారీగా వర్గీకరించండి: {{words}}. JSON జాబితాల జాబితాగా సమాధానం ఇవ్వండి, ఉదాహరణకు {_ANAGRAM_EXAMPLE}."],
    "sw": [f"Anagramu ni neno linaloundwa kwa kupanga upya herufi za neno jingine. Panga orodha ifuatayo ya maneno ya Kiingereza katika makundi ya anagramu: {{words}}. Jibu kwa orodha ya orodha za JSON, kwa mfano {_ANAGRAM_EXAMPLE}."],
}

TEMPLATES["word_sorting"] = {
    "en": ["Sort the following English words in ascending alphabetical order (case-insensitive): {words}. Answer with the sorted words separated by commas."],
    "zh": ["请将下列英文单词按字母升序排列（不区分大小写）：{words}。答案用逗号分隔这些单词。"],
    "de": ["Sortiere die folgenden englischen Wörter in aufsteigender alphabetischer Reihenfolge (ohne Beachtung der Groß- und Kleinschreibung): {words}. Antworte mit den sortierten Wörtern, durch Kommas getrennt."],
    "es": ["Ordena las siguientes palabras en inglés en orden alfabético ascendente (sin distinguir mayúsculas): {words}. Responde con las palabras ordenadas separadas por comas."],
    "fr": ["Trie les mots anglais suivants par ordre alphabétique croissant (sans tenir compte de la casse) : {words}. Réponds avec les mots triés séparés par des virgules."],
    "it": ["Ordina le seguenti parole inglesi in ordine alfabetico crescente (senza distinzione tra maiuscole e minuscole): {words}. Rispondi con le parole ordinate separate da virgole."],
    "pt": ["Ordene as seguintes palavras em inglês em ordem alfabética crescente (sem diferenciar maiúsculas de minúsculas): {words}. Responda com as palavras ordenadas separadas por vírgulas."],
    "ru": ["Отсортируйте следующие английские слова по возрастанию в алфавитном порядке (без учёта регистра): {words}. В ответе перечислите отсортированные слова через запятую."],
    "ja": ["次の英単語をアルファベットの昇順に並べ替えよ（大文字と小文字は区別しない）：{words}。並べ替えた単語をコンマ区切りで答えること。"],
    "ko": ["다음 영어 단어들을 알파벳 오름차순으로 정렬하세요(대소문자 구분 없음): {words}. 정렬된 단어들을 쉼표로 구분하여 답하세요."],
    "th": ["จงเรียงคำภาษาอังกฤษต่อไปนี้ตามลำดับตัวอักษรจากน้อยไปมาก (ไม่สนใจตัวพิมพ์): {words} ตอบด้วยคำที่เรียงแล้วคั่นด้วยจุลภาค"],
    "bn": ["নিচের ইংরেজি শব্দগুলিকে ঊর্ধ্বক্রমে বর্ণানুক্রমিকভাবে সাজান (বড়-ছোট হাতের পার্থক্য ছাড়া): {words}। সাজানো শব্দগুলি কমা দিয়ে আলাদা করে উত্তর দিন।"],
    "te": ["కింది ఆంగ్ల పదాలను అక్షరక్రమంలో ఆరోహణ క్రమంలో అమర్చండి (పెద్ద-చిన్న అక్షరాల తేడా లేకుండా): {words}. అమర్చిన పదాలను కామాలతో వేరు చేసి సమాధానం ఇవ్వండి."],
    "sw": ["Panga maneno yafuatayo ya Kiingereza kwa mpangilio wa alfabeti kuanzia ndogo (bila kujali herufi kubwa au ndogo): {words}. Jibu kwa maneno yaliyopangwa yakitenganishwa kwa koma."],
}

TEMPLATES["spiral_matrix"] = {
    "en": ["Given the following matrix, list its elements in clockwise spiral order, starting from the top-left corner and moving right first:\n{matrix}\nAnswer with the elements separated by spaces."],
    "zh": ["给定下面的矩阵，请从左上角开始先向右移动，按顺时针螺旋顺序列出所有元素：\n{matrix}\n答案用空格分隔各元素。"],
    "de": ["Gegeben ist die folgende Matrix. Nenne ihre Elemente in spiralförmiger Reihenfolge im Uhrzeigersinn, beginnend in der linken oberen Ecke und zuerst nach rechts:\n{matrix}\nAntworte mit den Elementen, durch Leerzeichen getrennt."],
    "es": ["Dada la siguiente matriz, enumera sus elementos en orden espiral en el sentido de las agujas del reloj, comenzando desde la esquina superior izquierda y moviéndote primero a la derecha:\n{matrix}\nResponde con los elementos separados por espacios."],
    "fr": ["Étant donné la matrice suivante, énumère ses éléments en spirale dans le sens des aiguilles d'une montre, en commençant par le coin supérieur gauche et en allant d'abord vers la droite :\n{matrix}\nRéponds avec les éléments séparés par des espaces."],
    "it": ["Data la seguente matrice, elenca i suoi elementi in ordine a spirale in senso orario, partendo dall'angolo in alto a sinistra e muovendoti prima verso destra:\n{matrix}\nRispondi con gli elementi separati da spazi."],
    "pt": ["Dada a seguinte matriz, liste seus elementos em ordem espiral no sentido horário, começando no canto superior esquerdo e movendo-se primeiro para a direita:\n{matrix}\nResponda com os elementos separados por espaços."],
    "ru": ["Дана следующая матрица. Перечислите её элементы по спирали по часовой стрелке, начиная с левого верхнего угла и двигаясь сначала вправо:\n{matrix}\nВ ответе укажите элементы через пробел."],
    "ja": ["次の行列について、左上隅から始めて最初に右へ進み、時計回りの渦巻き順に要素を列挙せよ：\n{matrix}\n要素を空白区切りで答えること。"],
    "ko": ["다음 행렬의 원소를 왼쪽 위 모서리에서 시작하여 먼저 오른쪽으로 이동하며 시계 방향 나선 순서로 나열하세요:\n{matrix}\n원소들을 공백으로 구분하여 답하세요."],
    "th": ["จากเมทริกซ์ต่อไปนี้ จงเรียงสมาชิกตามลำดับวนตามเข็มนาฬิกา โดยเริ่มจากมุมซ้ายบนและไปทางขวาก่อน:\n{matrix}\nตอบโดยคั่นสมาชิกด้วยช่องว่าง"],
    "bn": ["নিচের ম্যাট্রিক্সটির উপাদানগুলি ঘড়ির কাঁটার দিকে সর্পিল ক্রমে লিখুন, উপরের বাম কোণ থেকে শুরু করে প্রথমে ডান দিকে যান:\n{matrix}\nউপাদানগুলি স্পেস দিয়ে আলাদা করে উত্তর দিন।"],
    "te": ["కింది మాత్రికలోని మూలకాలను గడియారపు దిశలో సర్పిలాకార క్రమంలో రాయండి, పై ఎడమ మూల నుండి మొదలుపెట్టి ముందుగా కుడివైపు వెళ్లండి:\n{matrix}\nమూలకాలను ఖాళీలతో వేరు చేసి సమాధానం ఇవ్వండి."],
    "sw": ["Ukizingatia matriki ifuatayo, orodhesha vipengele vyake kwa mzunguko wa saa kwa mpangilio wa ond, ukianzia pembe ya juu kushoto na kwenda kulia kwanza:\n{matrix}\nJibu kwa vipengele vikitenganishwa kwa nafasi."],
}

TEMPLATES["game_of_life"] = {
    "en": ["The grid below shows a cellular automaton: 1 is a live cell, 0 is a dead cell. At each step, a live cell survives with 2 or 3 live neighbors, a dead cell becomes alive with exactly 3 live neighbors, and cells outside the grid are always dead. Steps to simulate: {steps}\n{board}\nAnswer with the final grid as rows of 0s and 1s separated by spaces."],
    "zh": ["下面的网格是一个元胞自动机：1表示活细胞，0表示死细胞。每一步中，活细胞在有2个或3个活邻居时存活，死细胞在恰好有3个活邻居时复活，网格外的细胞始终是死的。需要模拟的步数：{steps}\n{board}\n答案为最终网格，每行由0和1组成，各行之间用空格分隔。"],
    "de": ["Das folgende Gitter zeigt einen zellulären Automaten: 1 ist eine lebende Zelle, 0 eine tote Zelle. In jedem Schritt überlebt eine lebende Zelle mit 2 oder 3 lebenden Nachbarn, eine tote Zelle wird mit genau 3 lebenden Nachbarn lebendig, und Zellen außerhalb des Gitters sind immer tot. Zu simulierende Schritte: {steps}\n{board}\nAntworte mit dem endgültigen Gitter als Zeilen aus 0en und 1en, durch Leerzeichen getrennt."],
    "es": ["La cuadrícula de abajo muestra un autómata celular: 1 es una célula viva y 0 una célula muerta. En cada paso, una célula viva sobrevive con 2 o 3 vecinas vivas, una célula muerta nace con exactamente 3 vecinas vivas, y las células fuera de la cuadrícula siempre están muertas. Pasos a simular: {steps}\n{board}\nResponde con la cuadrícula final como filas de 0 y 1 separadas por espacios."],
    "fr": ["La grille ci-dessous montre un automate cellulaire : 1 est une cellule vivante, 0 une cellule morte. À chaque étape, une cellule vivante survit avec 2 ou 3 voisines vivantes, une cellule morte naît avec exactement 3 voisines vivantes, et les cellules hors de la grille sont toujours mortes. Étapes à simuler : {steps}\n{board}\nRéponds avec la grille finale sous forme de lignes de 0 et de 1 séparées par des espaces."],
    "it": ["La griglia qui sotto mostra un automa cellulare: 1 è una cellula viva, 0 una cellula morta. A ogni passo, una cellula viva sopravvive con 2 o 3 vicine vive, una cellula morta nasce con esattamente 3 vicine vive, e le cellule fuori dalla griglia sono sempre morte. Passi da simulare: {steps}\n{board}\nRispondi con la griglia finale come righe di 0 e 1 separate da spazi."],
    "pt": ["A grade abaixo mostra um autômato celular: 1 é uma célula viva e 0 uma célula morta. A cada passo, uma célula viva sobrevive com 2 ou 3 vizinhas vivas, uma célula morta nasce com exatamente 3 vizinhas vivas, e as células fora da grade estão sempre mortas. Passos a simular: {steps}\n{board}\nResponda com a grade final como linhas de 0s e 1s separadas por espaços."],
    "ru": ["Сетка ниже показывает клеточный автомат: 1 — живая клетка, 0 — мёртвая. На каждом шаге живая клетка выживает при 2 или 3 живых соседях, мёртвая клетка оживает ровно при 3 живых соседях, а клетки за пределами сетки всегда мертвы. Шагов для моделирования: {steps}\n{board}\nВ ответе укажите итоговую сетку в виде строк из 0 и 1, разделённых пробелами."],
    "ja": ["下の格子はセル・オートマトンを示す：1は生きたセル、0は死んだセルである。各ステップで、生きたセルは生きた隣接セルが2個または3個なら生き残り、死んだセルは生きた隣接セルがちょうど3個なら生き返る。格子の外のセルは常に死んでいる。シミュレートするステップ数：{steps}\n{board}\n最終的な格子を、0と1からなる行を空白で区切って答えること。"],
    "ko": ["아래 격자는 세포 자동자를 나타냅니다: 1은 살아 있는 세포, 0은 죽은 세포입니다. 각 단계에서 살아 있는 세포는 살아 있는 이웃이 2개 또는 3개면 살아남고, 죽은 세포는 살아 있는 이웃이 정확히 3개면 살아납니다. 격자 밖의 세포는 항상 죽어 있습니다. 시뮬레이션할 단계 수: {steps}\n{board}\n최종 격자를 0과 1로 이루어진 행으로, 공백으로 구분하여 답하세요."],
    "th": ["ตารางด้านล่างแสดงออโตมาตาเซลล์: 1 คือเซลล์ที่มีชีวิต 0 คือเซลล์ที่ตายแล้ว ในแต่ละขั้น เซลล์ที่มีชีวิตจะอยู่รอดเมื่อมีเพื่อนบ้านที่มีชีวิต 2 หรือ 3 เซลล์ เซลล์ที่ตายจะกลับมามีชีวิตเมื่อมีเพื่อนบ้านที่มีชีวิต 3 เซลล์พอดี และเซลล์นอกตารางจะตายเสมอ จำนวนขั้นที่ต้องจำลอง: {steps}\n{board}\nตอบด้วยตารางสุดท้ายเป็นแถวของ 0 และ 1 คั่นด้วยช่องว่าง"],
    "bn": ["নিচের গ্রিডটি একটি সেলুলার অটোমেটন দেখায়: 1 মানে জীবিত কোষ, 0 মানে মৃত কোষ। প্রতি ধাপে, জীবিত কোষ 2 বা 3টি জীবিত প্রতিবেশী থাকলে বেঁচে থাকে, মৃত কোষ ঠিক 3টি জীবিত প্রতিবেশী থাকলে জীবিত হয়, এবং গ্রিডের বাইরের কোষ সবসময় মৃত। যত ধাপ চালাতে হবে: {steps}\n{board}\nচূড়ান্ত গ্রিডটি 0 ও 1 এর সারি আকারে স্পেস দিয়ে আলাদা করে উত্তর দিন।"],
    "te": ["కింది గ్రిడ్ ఒక సెల్యులార్ ఆటోమేటన్‌ను చూపుతుంది: 1 అంటే బతికి ఉన్న కణం, 0 అంటే చనిపోయిన కణం. ప్రతి దశలో, బతికి ఉన్న కణం 2 లేదా 3 బతికున్న పొరుగు కణాలు ఉంటే బతుకుతుంది, చనిపోయిన కణం సరిగ్గా 3 బతికున్న పొరుగు కణాలు ఉంటే బతుకుతుంది, గ్రిడ్ బయటి కణాలు ఎల్లప్పుడూ చనిపోయి ఉంటాయి. అనుకరించాల్సిన దశలు: {steps}\n{board}\nతుది గ్రిడ్‌ను 0 మరియు 1 వరుసలుగా, ఖాళీలతో వేరు చేసి సమాధానం ఇవ్వండి."],
    "sw": ["Gridi iliyo hapa chini inaonyesha otomata ya seli: 1 ni seli hai na 0 ni seli iliyokufa. Katika kila hatua, seli hai hubaki hai ikiwa na majirani hai 2 au 3, seli iliyokufa hufufuka ikiwa na majirani hai 3 haswa, na seli zilizo nje ya gridi huwa zimekufa daima. Hatua za kuiga: {steps}\n{board}\nJibu kwa gridi ya mwisho kama safu za 0 na 1 zikitenganishwa kwa nafasi."],
}

TEMPLATES["syllogism"] = {
    "en": ["Consider the following premises:\n{premise1}\n{premise2}\nDoes this conclusion follow logically{?}\n{conclusion}\nAnswer {valid_token} or {invalid_token}."],
    "zh": ["考虑以下前提：\n{premise1}\n{premise2}\n下面的结论在逻辑上成立吗{?}\n{conclusion}\n请回答{valid_token}或{invalid_token}。"],
    "de": ["Betrachte die folgenden Prämissen:\n{premise1}\n{premise2}\nFolgt diese Schlussfolgerung logisch{?}\n{conclusion}\nAntworte mit {valid_token} oder {invalid_token}."],
    "es": ["Considera las siguientes premisas:\n{premise1}\n{premise2}\n¿Se sigue lógicamente esta conclusión{?}\n{conclusion}\nResponde {valid_token} o {invalid_token}."],
    "fr": ["Considère les prémisses suivantes :\n{premise1}\n{premise2}\nCette conclusion découle-t-elle logiquement{?}\n{conclusion}\nRéponds {valid_token} ou {invalid_token}."],
    "it": ["Considera le seguenti premesse:\n{premise1}\n{premise2}\nQuesta conclusione segue logicamente{?}\n{conclusion}\nRispondi {valid_token} o {invalid_token}."],
    "pt": ["Considere as seguintes premissas:\n{premise1}\n{premise2}\nEsta conclusão segue logicamente{?}\n{conclusion}\nResponda {valid_token} ou {invalid_token}."],
    "ru": ["Рассмотрите следующие посылки:\n{premise1}\n{premise2}\nСледует ли логически этот вывод{?}\n{conclusion}\nОтветьте {valid_token} или {invalid_token}."],
    "ja": ["次の前提を考えよ：\n{premise1}\n{premise2}\n次の結論は論理的に導かれるか{?}\n{conclusion}\n{valid_token}か{invalid_token}で答えること。"],
    "ko": ["다음 전제를 고려하세요:\n{premise1}\n{premise2}\n다음 결론이 논리적으로 따라 나옵니까{?}\n{conclusion}\n{valid_token} 또는 {invalid_token}로 답하세요."],
    "th": ["พิจารณาข้อตั้งต่อไปนี้:\n{premise1}\n{premise2}\nข้อสรุปนี้ตามมาอย่างสมเหตุสมผลหรือไม่{?}\n{conclusion}\nตอบ {valid_token} หรือ {invalid_token}"],
    "bn": ["নিচের পূর্বশর্তগুলি বিবেচনা করুন:\n{premise1}\n{premise2}\nএই সিদ্ধান্তটি কি যুক্তিসঙ্গতভাবে অনুসৃত হয়{?}\n{conclusion}\n{valid_token} বা {invalid_token} উত্তর দিন।"],
    "te": ["కింది ఆధారవాక్యాలను పరిగణించండి:\n{premise1}\n{premise2}\nఈ నిర్ధారణ తార్కికంగా అనుసరిస్తుందా{?}\n{conclusion}\n{valid_token} లేదా {invalid_token} అని సమాధానం ఇవ్వండి."],
    "sw": ["Zingatia misingi ifuatayo:\n{premise1}\n{premise2}\nJe, hitimisho hili linafuata kimantiki{?}\n{conclusion}\nJibu {valid_token} au {invalid_token}."],
}

# ---------------------------------------------------------------------------
# Answer tokens (canonical -> localized) for localized-boolean tasks.
# ---------------------------------------------------------------------------

TRUE_FALSE: dict[str, tuple[str, str]] = {
    "en": ("True", "False"),
    "zh": ("真", "假"),
    "de": ("Wahr", "Falsch"),
    "es": ("Verdadero", "Falso"),
    "fr": ("Vrai", "Faux"),
    "it": ("Vero", "Falso"),
    "pt": ("Verdadeiro", "Falso"),
    "ru": ("Истина", "Ложь"),
    "ja": ("真", "偽"),
    "ko": ("참", "거짓"),
    "th": ("จริง", "เท็จ"),
    "bn": ("সত্য", "মিথ্যা"),
    "te": ("నిజం", "అబద్ధం"),
    "sw": ("Kweli", "Uongo"),
}

VALID_INVALID: dict[str, tuple[str, str]] = {
    "en": ("Valid", "Invalid"),
    "zh": ("有效", "无效"),
    "de": ("Gültig", "Ungültig"),
    "es": ("Válido", "Inválido"),
    "fr": ("Valide", "Invalide"),
    "it": ("Valido", "Invalido"),
    "pt": ("Válido", "Inválido"),
    "ru": ("Верно", "Неверно"),
    "ja": ("妥当", "非妥当"),
    "ko": ("타당", "부당"),
    "th": ("สมเหตุสมผล", "ไม่สมเหตุสมผล"),
    "bn": ("বৈধ", "অবৈধ"),
    "te": ("చెల్లుతుంది", "చెల్లదు"),
    "sw": ("Halali", "Batili"),
}

# ---------------------------------------------------------------------------
# Localized animal names for leg_counting (template keys animal_<id>).
# ---------------------------------------------------------------------------

ANIMALS: dict[str, dict[str, str]] = {
    "spider": {"en": "spider", "zh": "蜘蛛", "de": "Spinne", "es": "araña", "fr": "araignée", "it": "ragno", "pt": "aranha", "ru": "паук", "ja": "クモ", "ko": "거미", "th": "แมงมุม", "bn": "মাকড়সা", "te": "సాలీడు", "sw": "buibui"},
    "ant": {"en": "ant", "zh": "蚂蚁", "de": "Ameise", "es": "hormiga", "fr": "fourmi", "it": "formica", "pt": "formiga", "ru": "муравей", "ja": "アリ", "ko": "개미", "th": "มด", "bn": "পিঁপড়া", "te": "చీమ", "sw": "chungu"},
    "bee": {"en": "bee", "zh": "蜜蜂", "de": "Biene", "es": "abeja", "fr": "abeille", "it": "ape", "pt": "abelha", "ru": "пчела", "ja": "ミツバチ", "ko": "꿀벌", "th": "ผึ้ง", "bn": "মৌমাছি", "te": "తేనెటీగ", "sw": "nyuki"},
    "butterfly": {"en": "butterfly", "zh": "蝴蝶", "de": "Schmetterling", "es": "mariposa", "fr": "papillon", "it": "farfalla", "pt": "borboleta", "ru": "бабочка", "ja": "チョウ", "ko": "나비", "th": "ผีเสื้อ", "bn": "প্রজাপতি", "te": "సీతాకోకచిలుక", "sw": "kipepeo"},
    "cow": {"en": "cow", "zh": "奶牛", "de": "Kuh", "es": "vaca", "fr": "vache", "it": "mucca", "pt": "vaca", "ru": "корова", "ja": "ウシ", "ko": "소", "th": "วัว", "bn": "গরু", "te": "ఆవు", "sw": "ng'ombe"},
    "horse": {"en": "horse", "zh": "马", "de": "Pferd", "es": "caballo", "fr": "cheval", "it": "cavallo", "pt": "cavalo", "ru": "лошадь", "ja": "ウマ", "ko": "말", "th": "ม้า", "bn": "ঘোড়া", "te": "గుర్రం", "sw": "farasi"},
    "dog": {"en": "dog", "zh": "狗", "de": "Hund", "es": "perro", "fr": "chien", "it": "cane", "pt": "cachorro", "ru": "собака", "ja": "イヌ", "ko": "개", "th": "สุนัข", "bn": "কুকুর", "te": "కుక్క", "sw": "mbwa"},
    "cat": {"en": "cat", "zh": "猫", "de": "Katze", "es": "gato", "fr": "chat", "it": "gatto", "pt": "gato", "ru": "кошка", "ja": "ネコ", "ko": "고양이", "th": "แมว", "bn": "বিড়াল", "te": "పిల్లి", "sw": "paka"},
    "tiger": {"en": "tiger", "zh": "老虎", "de": "Tiger", "es": "tigre", "fr": "tigre", "it": "tigre", "pt": "tigre", "ru": "тигр", "ja": "トラ", "ko": "호랑이", "th": "เสือ", "bn": "বাঘ", "te": "పులి", "sw": "chui milia"},
    "sheep": {"en": "sheep", "zh": "绵羊", "de": "Schaf", "es": "oveja", "fr": "mouton", "it": "pecora", "pt": "ovelha", "ru": "овца", "ja": "ヒツジ", "ko": "양", "th": "แกะ", "bn": "ভেড়া", "te": "గొర్రె", "sw": "kondoo"},
    "duck": {"en": "duck", "zh": "鸭子", "de": "Ente", "es": "pato", "fr": "canard", "it": "anatra", "pt": "pato", "ru": "утка", "ja": "カモ", "ko": "오리", "th": "เป็ด", "bn": "হাঁস", "te": "బాతు", "sw": "bata"},
    "chicken": {"en": "chicken", "zh": "鸡", "de": "Huhn", "es": "gallina", "fr": "poule", "it": "gallina", "pt": "galinha", "ru": "курица", "ja": "ニワトリ", "ko": "닭", "th": "ไก่", "bn": "মুরগি", "te": "కోడి", "sw": "kuku"},
    "crow": {"en": "crow", "zh": "乌鸦", "de": "Krähe", "es": "cuervo", "fr": "corbeau", "it": "corvo", "pt": "corvo", "ru": "ворона", "ja": "カラス", "ko": "까마귀", "th": "อีกา", "bn": "কাক", "te": "కాకి", "sw": "kunguru"},
    "human": {"en": "human", "zh": "人", "de": "Mensch", "es": "humano", "fr": "humain", "it": "umano", "pt": "humano", "ru": "человек", "ja": "人間", "ko": "사람", "th": "มนุษย์", "bn": "মানুষ", "te": "మనిషి", "sw": "binadamu"},
}

TOKEN_TABLES: dict[str, dict[str, tuple[str, str]] | None] = {
    "gcd": None,
    "count_bits": None,
    "chain_sum": None,
    "leg_counting": None,
    "number_sequence": None,
    "simple_equations": None,
    "isomorphic_strings": TRUE_FALSE,
    "spell_backward": None,
    "letter_counting": None,
    "group_anagrams": None,
    "word_sorting": None,
    "spiral_matrix": None,
    "game_of_life": None,
    "syllogism": VALID_INVALID,
}

CANONICAL_TOKENS = {"isomorphic_strings": ("True", "False"), "syllogism": ("Valid", "Invalid")}

# ---------------------------------------------------------------------------
# Language-level shared tables
# ---------------------------------------------------------------------------

ANSWER_MARKERS: dict[str, list[str]] = {
    "en": ["final answer:", "final answer is", "the answer is", "answer:", "answer is"],
    "zh": ["最终答案：", "最终答案:", "答案是", "答案：", "答案:"],
    "de": ["endgültige antwort:", "die antwort ist", "die antwort lautet", "antwort:"],
    "es": ["respuesta final:", "la respuesta es", "respuesta:"],
    "fr": ["réponse finale :", "réponse finale:", "la réponse est", "réponse :", "réponse:"],
    "it": ["risposta finale:", "la risposta è", "risposta:"],
    "pt": ["resposta final:", "a resposta é", "resposta:"],
    "ru": ["окончательный ответ:", "итоговый ответ:", "ответ:"],
    "ja": ["最終回答：", "最終回答:", "答えは", "答え：", "答え:", "回答："],
    "ko": ["최종 답:", "최종 정답:", "정답은", "정답:", "답:"],
    "th": ["คำตอบสุดท้าย:", "คำตอบคือ", "คำตอบ:"],
    "bn": ["চূড়ান্ত উত্তর:", "উত্তর হল", "উত্তর:"],
    "te": ["తుది సమాధానం:", "సమాధానం:"],
    "sw": ["jibu la mwisho:", "jibu ni", "jibu:"],
}

STOPWORDS: dict[str, list[str]] = {
    "en": ["the", "a", "an", "is", "are", "was", "were", "be", "of", "to", "in", "on", "at", "by", "for", "with", "from", "as", "that", "this", "these", "it", "its", "and", "or", "but", "not", "no", "if", "then", "than", "so", "we", "you", "they", "he", "she", "i", "my", "your", "their", "what", "which", "who", "how", "when", "where", "why", "all", "each", "every", "some", "any", "there", "here", "have", "has", "had", "do", "does", "did", "will", "would", "can", "could", "should", "only", "very", "also", "just", "into", "about", "following", "give", "answer", "many", "times", "letter", "word", "words", "these", "numbers", "value", "total", "otherwise", "or"],
    "de": ["der", "die", "das", "den", "dem", "des", "ein", "eine", "einer", "eines", "einem", "einen", "und", "oder", "aber", "nicht", "kein", "keine", "ist", "sind", "war", "waren", "sein", "wird", "werden", "wurde", "mit", "von", "zu", "zur", "zum", "aus", "auf", "in", "im", "an", "am", "für", "über", "unter", "zwischen", "nach", "vor", "bei", "durch", "gegen", "ohne", "um", "als", "wenn", "dann", "also", "auch", "noch", "nur", "sehr", "schon", "wie", "was", "wer", "wo", "wann", "warum", "welche", "welcher", "dies", "diese", "dieser", "dieses", "es", "er", "sie", "wir", "ihr", "ich", "du", "man", "sich", "antwort", "zahl", "zahlen", "folgenden", "folgende", "gib", "berechne", "wort", "wörter", "insgesamt"],
    "es": ["el", "la", "los", "las", "un", "una", "unos", "unas", "y", "o", "pero", "no", "sí", "es", "son", "era", "eran", "ser", "está", "están", "de", "del", "en", "con", "por", "para", "sin", "sobre", "entre", "hasta", "desde", "a", "al", "que", "cual", "como", "cuando", "donde", "quien", "qué", "cómo", "cuántas", "cuántos", "este", "esta", "estos", "estas", "ese", "esa", "lo", "le", "les", "se", "su", "sus", "mi", "tu", "también", "solo", "muy", "más", "menos", "cada", "todo", "toda", "todos", "todas", "respuesta", "número", "números", "siguiente", "siguientes", "da", "encuentra", "palabra", "palabras", "veces", "letra", "valor"],
    "fr": ["le", "la", "les", "un", "une", "des", "du", "de", "et", "ou", "mais", "ne", "pas", "non", "oui", "est", "sont", "était", "étaient", "être", "sera", "à", "au", "aux", "en", "dans", "sur", "sous", "avec", "sans", "pour", "par", "entre", "vers", "chez", "que", "qui", "quoi", "dont", "où", "quand", "comment", "pourquoi", "combien", "ce", "cet", "cette", "ces", "il", "elle", "ils", "elles", "nous", "vous", "je", "tu", "on", "se", "son", "sa", "ses", "leur", "leurs", "aussi", "très", "plus", "moins", "tout", "toute", "tous", "toutes", "chaque", "réponse", "nombre", "nombres", "suivant", "suivante", "suivants", "donne", "trouve", "mot", "mots", "fois", "lettre", "valeur"],
    "it": ["il", "lo", "la", "i", "gli", "le", "un", "uno", "una", "e", "ed", "o", "ma", "non", "no", "sì", "è", "sono", "era", "erano", "essere", "sarà", "di", "del", "della", "dei", "delle", "dello", "degli", "a", "al", "alla", "ai", "alle", "in", "nel", "nella", "nei", "nelle", "con", "per", "su", "sul", "sulla", "tra", "fra", "da", "dal", "dalla", "che", "chi", "cui", "come", "quando", "dove", "perché", "quanto", "quanti", "quante", "questo", "questa", "questi", "queste", "quello", "quella", "noi", "voi", "io", "tu", "si", "suo", "sua", "anche", "molto", "più", "meno", "solo", "ogni", "tutto", "tutti", "tutte", "risposta", "numero", "numeri", "seguente", "seguenti", "fornisci", "trova", "parola", "parole", "volte", "lettera", "valore", "altrimenti"],
    "pt": ["o", "a", "os", "as", "um", "uma", "uns", "umas", "e", "ou", "mas", "não", "sim", "é", "são", "era", "eram", "ser", "está", "estão", "de", "do", "da", "dos", "das", "em", "no", "na", "nos", "nas", "com", "por", "para", "sem", "sobre", "entre", "até", "desde", "ao", "aos", "à", "às", "que", "qual", "quais", "como", "quando", "onde", "quem", "quantas", "quantos", "este", "esta", "estes", "estas", "esse", "essa", "isso", "ele", "ela", "eles", "elas", "nós", "eu", "tu", "você", "se", "seu", "sua", "seus", "suas", "também", "só", "muito", "mais", "menos", "cada", "todo", "toda", "todos", "todas", "resposta", "número", "números", "seguinte", "seguintes", "dê", "encontre", "palavra", "palavras", "vezes", "letra", "valor"],
    "sw": ["na", "ya", "wa", "za", "la", "cha", "vya", "kwa", "ni", "si", "katika", "kama", "hii", "huu", "hili", "hizi", "hivi", "huo", "hiyo", "ile", "yake", "wake", "zake", "lake", "chake", "kwamba", "ili", "lakini", "au", "pia", "tu", "sana", "je", "gani", "ngapi", "nini", "nani", "wapi", "lini", "kila", "yote", "zote", "wote", "hapa", "pale", "sasa", "bado", "baada", "kabla", "chini", "juu", "ndani", "nje", "mimi", "wewe", "yeye", "sisi", "ninyi", "wao", "jibu", "nambari", "neno", "maneno", "ifuatayo", "yafuatayo", "wafuatao", "toa", "tafuta", "mara", "herufi", "thamani", "jumla", "pekee", "mwisho"],
}


def build_pack(task: str, language: str) -> dict:
    tokens = {}
    table = TOKEN_TABLES[task]
    if table is not None:
        canonical = CANONICAL_TOKENS[task]
        tokens = dict(zip(canonical, table[language]))
    templates: dict[str, list[str]] = {"question": TEMPLATES[task][language]}
    if task == "leg_counting":
        for animal, names in ANIMALS.items():
            templates[f"animal_{animal}"] = [names[language]]
    return {
        "schema_version": 1,
        "task_id": task,
        "language": language,
        "quality": "native_validated" if language == "en" else "machine_translated",
        "conventions": dict(CONVENTIONS[language], placeholder_wrapping="none"),
        "answer_tokens": tokens,
        "templates": templates,
    }


def main() -> int:
    written = 0
    for task in sorted(TEMPLATES):
        missing = [lang for lang in LANGUAGES if lang not in TEMPLATES[task]]
        if missing:
            raise SystemExit(f"{task}: missing languages {missing}")
        for language in LANGUAGES:
            pack = build_pack(task, language)
            path = LOCALES / task / f"{language}.json"
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(pack, fh, ensure_ascii=False, indent=2, sort_keys=True)
                fh.write("\n")
            written += 1
    for name, table in (("answer_markers.json", ANSWER_MARKERS), ("stopwords.json", STOPWORDS)):
        with open(LOCALES / name, "w", encoding="utf-8") as fh:
            json.dump(table, fh, ensure_ascii=False, indent=2, sort_keys=True)
            fh.write("\n")
        written += 1
    with open(LOCALES / "lint_allowlist.json", "w", encoding="utf-8") as fh:
        json.dump({"entries": []}, fh, ensure_ascii=False, indent=2)
        fh.write("\n")
    written += 1
    print(f"wrote {written} files under {LOCALES}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
